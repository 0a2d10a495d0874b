#include <doctest.h>

#include <algorithm>

#include "gtp/error.hpp"
#include "gtp/fixtures.hpp"
#include "gtp/search.hpp"
#include "naive.hpp"

using namespace gtp;

TEST_CASE("triangle counts") {
  const std::uint64_t want[] = {1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count({Family::gog, Shape::triangle(n)}).total == want[n - 1]);
    CHECK(count({Family::gogam, Shape::triangle(n)}).total == want[n - 1]);
  }
}

TEST_CASE("small trapezoid counts") {
  CHECK(count({Family::gog, Shape::left(5, 1)}).total == 42);
  CHECK(count({Family::gogam, Shape::left(3, 2)}).total == 7);
  CHECK(count({Family::gog, Shape::left(3, 2)}).total == 7);
  const auto two = enumerate({Family::gogam, Shape::left(2, 2)});
  REQUIRE(two.size() == 2);
  for (int t = 0; t < 2; ++t)
    CHECK(std::equal(two[t].entries().begin(), two[t].entries().end(), naive::triangles(2).gogam[t].entries().begin()));
}

TEST_CASE("enumeration equals the naive oracle") {
  for (int n = 1; n <= 5; ++n)
    for (Family f : {Family::gog, Family::gogam}) {
      CAPTURE(n);
      CAPTURE(family_name(f));
      CHECK(enumerate({f, Shape::triangle(n)}) ==
            (f == Family::gog ? naive::triangles(n).gog : naive::triangles(n).gogam));
      for (int k = 1; k <= n; ++k) {
        CAPTURE(k);
        CHECK(enumerate({f, Shape::left(n, k)}) == naive::family({f, Shape::left(n, k)}));
        CHECK(enumerate({f, Shape::right(n, k)}) == naive::family({f, Shape::right(n, k)}));
        for (int l = 1; k + l <= n + 1; ++l)
          CHECK(enumerate({f, Shape::rectangle(n, k, l)}) == naive::family({f, Shape::rectangle(n, k, l)}));
      }
    }
}

TEST_CASE("parallel runs match serial runs") {
  SearchOptions serial;
  SearchOptions parallel;
  parallel.threads = 4;
  for (Family f : {Family::gog, Family::gogam}) {
    const FamilySpec spec{f, Shape::left(6, 3)};
    CHECK(enumerate(spec, serial) == enumerate(spec, parallel));
    const auto a = count(spec, serial);
    const auto b = count(spec, parallel);
    CHECK(a.total == b.total);
    CHECK(a.by_bottom_entry == b.by_bottom_entry);
  }
}

TEST_CASE("full oracle sampling") {
  SearchOptions opt;
  opt.oracle_sample_rate = 1.0;
  CHECK(count({Family::gogam, Shape::triangle(5)}, opt).total == 429);
}

TEST_CASE("histograms") {
  const auto r = count({Family::gog, Shape::left(4, 2)});
  std::uint64_t sum = 0;
  for (const auto& [v, c] : r.by_bottom_entry) sum += c;
  CHECK(sum == r.total);
  CHECK(r.by_bottom_entry.at(1) == 5);

  const auto j = to_json(r);
  CHECK(j["family"] == "gog");
  CHECK(j["shape"]["kind"] == "left");
  CHECK(j["shape"]["n"] == 4);
  CHECK(j["shape"]["k"] == 2);
  CHECK_FALSE(j["shape"].contains("l"));
  CHECK(j["total"] == 35);
  CHECK(j["by_bottom_entry"]["1"] == 5);
}

TEST_CASE("membership needs the requested shape") {
  const Pattern p = fixture_pattern("left_gog_5_2.txt");
  CHECK(is_member({Family::gog, Shape::left(5, 2)}, p));
  CHECK_FALSE(is_member({Family::gog, Shape::left(5, 3)}, p));
}

TEST_CASE("family names") {
  CHECK(parse_family("gogam") == Family::gogam);
  CHECK_THROWS_AS(parse_family("magog"), ParseError);
  CHECK(to_string(FamilySpec{Family::gog, Shape::rectangle(5, 2, 3)}) == "gog rect 5 2 3");
}
