#include <doctest.h>

#include <algorithm>

#include "gtp/asm.hpp"
#include "gtp/error.hpp"
#include "gtp/gog.hpp"
#include "gtp/io.hpp"
#include "naive.hpp"

using namespace gtp;

TEST_CASE("ASM counts") {
  const std::vector<std::size_t> want{1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) CHECK(naive::all_asms(n).size() == want[n - 1]);
}

TEST_CASE("validation") {
  CHECK(is_asm(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));
  CHECK_FALSE(is_asm(3, {0, 1, 0, 1, 0, 1, 0, 0, 0}));
  CHECK_FALSE(is_asm(2, {1, 0, 0, 0}));
  CHECK_FALSE(is_asm(3, {1, 0, 0, -1, 1, 1, 1, 0, 0}));
  CHECK_THROWS_AS(AsmMatrix(2, {1, 1, 0, 0}), InvalidInput);
}

TEST_CASE("permutation matrices") {
  const AsmMatrix id = AsmMatrix::from_permutation({1, 2, 3});
  CHECK(to_text(gog_from_asm(id)) == "triangle 3\n1 2 3\n1 2\n1\n");
  const AsmMatrix rev = AsmMatrix::from_permutation({3, 2, 1});
  CHECK(to_text(gog_from_asm(rev)) == "triangle 3\n1 2 3\n2 3\n3\n");
  CHECK_THROWS(AsmMatrix::from_permutation({1, 1, 2}));
}

TEST_CASE("an ASM with a -1 entry") {
  const AsmMatrix a(3, {0, 1, 0, 1, -1, 1, 0, 1, 0});
  CHECK(to_text(gog_from_asm(a)) == "triangle 3\n1 2 3\n1 3\n2\n");
}

TEST_CASE("ASMs and Gog triangles are in bijection") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Pattern> images;
    for (const auto& a : naive::all_asms(n)) {
      const Pattern p = gog_from_asm(a);
      CHECK(asm_from_gog(p) == a);
      images.push_back(p);
    }
    std::sort(images.begin(), images.end(), lex_less);
    CHECK(images == naive::triangles(n).gog);
  }
  CHECK_THROWS_AS(asm_from_gog(Pattern::from_rows(Shape::triangle(2), {{1, 1}, {1}})), InvalidInput);
}

TEST_CASE("mirror is the vertical reflection of the ASM") {
  for (const auto& a : naive::all_asms(4)) {
    std::vector<int> flipped(16);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) flipped[r * 4 + c] = a.entries()[r * 4 + (3 - c)];
    CHECK(gog::mirror(gog_from_asm(a)) == gog_from_asm(AsmMatrix(4, flipped)));
  }
}

TEST_CASE("ASM text") {
  const AsmMatrix a(3, {0, 1, 0, 1, -1, 1, 0, 1, 0});
  CHECK(to_text(a) == "asm 3\n0 1 0\n1 -1 1\n0 1 0\n");
  CHECK(parse_asm(to_text(a)) == a);
  CHECK_THROWS_AS(parse_asm("asm 2\n1 0\n"), ParseError);
}
