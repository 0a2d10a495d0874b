#include <doctest.h>

#include <algorithm>
#include <random>

#include "gtp/error.hpp"
#include "gtp/fixtures.hpp"
#include "gtp/gogam.hpp"
#include "gtp/io.hpp"
#include "gtp/verify.hpp"
#include "naive.hpp"

using namespace gtp;
using gogam::DiagonalSequence;

namespace {

Pattern rows(Shape s, std::vector<std::vector<int>> r) { return Pattern::from_rows(s, r); }

template <class Pred>
std::vector<Pattern> accepted(const Shape& shape, Pred pred) {
  std::vector<Pattern> out;
  naive::for_each_gt_array(shape, shape.n(), [&](const Pattern& p) {
    if (pred(p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Join of the pinned witness pair.
const Pattern kJoin = Pattern::from_rows(Shape::triangle(3), {{1, 2, 3}, {2, 3}, {2}});

}  // namespace

TEST_CASE("diagonal sequences are validated") {
  CHECK_NOTHROW(DiagonalSequence(3, 2, {3, 1}));
  CHECK_NOTHROW(DiagonalSequence(3, 1, {3, 2, 1}));
  CHECK_THROWS_AS(DiagonalSequence(3, 2, {2, 1}), InvalidInput);
  CHECK_THROWS_AS(DiagonalSequence(3, 2, {3, 3}), InvalidInput);
  CHECK_THROWS_AS(DiagonalSequence(3, 1, {3, 1}), InvalidInput);
  CHECK_THROWS_AS(DiagonalSequence(3, 3, {3}), InvalidInput);
}

TEST_CASE("left-hand side by hand") {
  // Level 2: X_{3,3} - X_{j,j} + X_{j+1,j}.
  CHECK(gogam::eval_lhs(kJoin, DiagonalSequence(3, 2, {3, 2})) == 3 - 3 + 2);
  CHECK(gogam::eval_lhs(kJoin, DiagonalSequence(3, 2, {3, 1})) == 3 - 2 + 2);
  // Level 1: (X_{3,3} - X_{2,2}) + (X_{3,2} - X_{2,1}) + X_{3,1}.
  CHECK(gogam::eval_lhs(kJoin, DiagonalSequence(3, 1, {3, 2, 1})) == 0 + 0 + 1);

  const auto m = gogam::max_lhs(kJoin, 2);
  CHECK(m.value == 3);
  CHECK(m.witness == DiagonalSequence(3, 2, {3, 1}));
  CHECK_FALSE(gogam::is_triangle(kJoin));
}

TEST_CASE("ties go to the lexicographically largest sequence") {
  const Pattern ones = rows(Shape::triangle(3), {{1, 1, 1}, {1, 1}, {1}});
  const auto m = gogam::max_lhs(ones, 2);
  CHECK(m.value == 1);
  CHECK(m.witness == DiagonalSequence(3, 2, {3, 2}));
  CHECK(gogam::max_lhs_brute(ones, 2).witness == m.witness);
}

TEST_CASE("slack report covers every level") {
  const auto r = gogam::slack_report(fixture_pattern("left_gogam_5_2_completion.txt"));
  REQUIRE(r.size() == 4);
  for (const auto& [k, m] : r) CHECK(m.value <= k);
}

TEST_CASE("optimized maximum agrees with enumeration on random GT triangles") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 7; ++n)
    for (int s = 0; s < 300; ++s) {
      const Pattern p = Pattern::from_rows(Shape::triangle(n), verify::random_gt_rows(n, n, rng));
      REQUIRE(is_gt(p));
      for (int k = 1; k < n; ++k) {
        const auto a = gogam::max_lhs(p, k);
        const auto b = gogam::max_lhs_brute(p, k);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
      }
    }
}

TEST_CASE("triangle predicate matches the literal definition") {
  for (int n = 1; n <= 5; ++n)
    naive::for_each_gt_triangle(n, n, [&](const Pattern& p) {
      CHECK(gogam::is_triangle(p) == naive::is_gogam_triangle(p));
    });
  CHECK_FALSE(gogam::is_triangle(rows(Shape::triangle(2), {{1, 3}, {2}})));
}

TEST_CASE("worked trapezoids") {
  CHECK(gogam::is_right_trapezoid(fixture_pattern("right_gogam_5_2.txt")));
  const Pattern left = fixture_pattern("left_gogam_5_2.txt");
  CHECK(gogam::is_left_trapezoid(left));
  CHECK(to_text(gogam::complete_left(left)) == fixture("left_gogam_5_2_completion.txt"));
}

TEST_CASE("right completion fills ones") {
  const Pattern c = gogam::complete_right(fixture_pattern("right_gogam_5_2.txt"));
  CHECK(to_text(c) == "triangle 5\n1 1 1 2 4\n1 1 2 4\n1 2 4\n1 4\n3\n");
  CHECK(gogam::is_triangle(c));
}

TEST_CASE("membership predicates equal extraction from GOGAm triangles") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    for (int k = 1; k <= n; ++k) {
      CAPTURE(k);
      CHECK(accepted(Shape::left(n, k), gogam::is_left_trapezoid) ==
            naive::family({Family::gogam, Shape::left(n, k)}));
      CHECK(accepted(Shape::right(n, k), gogam::is_right_trapezoid) ==
            naive::family({Family::gogam, Shape::right(n, k)}));
      for (int l = 1; k + l <= n + 1; ++l) {
        CAPTURE(l);
        CHECK(accepted(Shape::rectangle(n, k, l), gogam::is_rectangle) ==
              naive::family({Family::gogam, Shape::rectangle(n, k, l)}));
      }
    }
  }
}

TEST_CASE("canonical completions are the minimal extensions") {
  for (int n = 1; n <= 5; ++n) {
    const auto& all = naive::triangles(n).gogam;
    for (int k = 1; k <= n; ++k) {
      for (const auto& t : naive::family({Family::gogam, Shape::left(n, k)})) {
        const Pattern c = gogam::complete_left(t);
        REQUIRE(gogam::is_triangle(c));
        for (const auto& p : all)
          if (restrict_to(p, t.shape()) == t) CHECK(leq(c, p));
      }
      for (const auto& t : naive::family({Family::gogam, Shape::right(n, k)})) {
        const Pattern c = gogam::complete_right(t);
        REQUIRE(gogam::is_triangle(c));
        for (const auto& p : all)
          if (restrict_to(p, t.shape()) == t) CHECK(leq(c, p));
      }
    }
  }
}

TEST_CASE("specialised (n,2) test agrees with the general one") {
  for (int n = 2; n <= 6; ++n)
    naive::for_each_gt_array(Shape::left(n, 2), n, [&](const Pattern& p) {
      CHECK(gogam::is_left_n2(p) == gogam::is_left_trapezoid(p));
    });
  CHECK(gogam::is_left_n2(fixture_pattern("left_gogam_5_2.txt")));
  CHECK_THROWS_AS(gogam::is_left_n2(fixture_pattern("gog_triangle_5.txt")), ShapeMismatch);
}

TEST_CASE("replacement rules by hand") {
  const Pattern q = rows(Shape::triangle(3), {{1, 2, 2}, {2, 2}, {2}});
  REQUIRE(gogam::is_triangle(q));
  // k = 1 clears X_{2,1}, X_{3,1}, X_{3,2}.
  CHECK(to_text(gogam::clear_upper_left(q, 1)) == "triangle 3\n1 1 2\n1 2\n2\n");
  CHECK(gogam::clear_upper_left(q, 3) == q);

  // m = k = 1: the diagonal (2,1),(3,2) is constant, so (2,2),(3,3) take X_{1,1}.
  const Pattern p = rows(Shape::triangle(3), {{1, 1, 3}, {1, 3}, {2}});
  REQUIRE(gogam::is_triangle(p));
  const auto y = gogam::propagate_diagonal(p, 1, 1);
  REQUIRE(y.has_value());
  CHECK(to_text(*y) == "triangle 3\n1 1 2\n1 2\n2\n");
  CHECK(gogam::is_triangle(*y));

  const Pattern g = rows(Shape::triangle(3), {{1, 2, 3}, {1, 3}, {2}});
  CHECK_FALSE(gogam::propagate_diagonal(g, 1, 1).has_value());
  CHECK_THROWS_AS(gogam::propagate_diagonal(g, 1, 2), InvalidInput);
}
