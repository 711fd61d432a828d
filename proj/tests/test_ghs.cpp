#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twonormal/ghs.hpp"

using namespace twonormal;

TEST_CASE("complexity measure") {
  CHECK(complexity_measure({}) == 0);
  CHECK(complexity_measure({2}) == 0);
  CHECK(complexity_measure({2, 2, 2}) == 0);
  CHECK(complexity_measure({0}) == 4);
  CHECK(complexity_measure({-2}) == 16);
  CHECK(complexity_measure({-2, 0}) == 20);
  CHECK(complexity_measure({1}) == 1);
}

TEST_CASE("non-separating compression") {
  SurfaceComplexity genus2{-2};
  SurfaceComplexity result = compress_nonseparating(genus2, -2);
  CHECK(result == SurfaceComplexity{0});
  CHECK(complexity_measure(result) < complexity_measure(genus2));

  // A torus compresses to a sphere.
  CHECK(compress_nonseparating({0}, 0) == SurfaceComplexity{2});

  // Other components ride along untouched.
  CHECK(compress_nonseparating({-2, 0, 2}, 0) ==
        SurfaceComplexity{-2, 2, 2});
}

TEST_CASE("separating compression") {
  CHECK(compress_separating({-2}, -2, 0, 0) == SurfaceComplexity{0, 0});
  CHECK(compress_separating({-2}, -2, 1, -1) == SurfaceComplexity{-1, 1});
  CHECK(compress_separating({-4, 2}, -4, -2, 0) ==
        SurfaceComplexity{-2, 0, 2});
  CHECK(complexity_measure(compress_separating({-4}, -4, -2, 0)) <
        complexity_measure({-4}));
}

TEST_CASE("compression rejections") {
  CHECK_THROWS_AS(compress_nonseparating({0}, -2), std::invalid_argument);
  CHECK_THROWS_WITH_AS(compress_nonseparating({2}, 2),
                       "sphere has no compression", std::invalid_argument);
  CHECK_THROWS_AS(compress_nonseparating({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(compress_nonseparating({3}, 3), std::invalid_argument);
  // Parts must add up to chi + 2.
  CHECK_THROWS_AS(compress_separating({-2}, -2, 0, 1),
                  std::invalid_argument);
  // Splitting off a sphere is no reduction.
  CHECK_THROWS_AS(compress_separating({-2}, -2, 2, -2),
                  std::invalid_argument);
}

TEST_CASE("every legal compression strictly decreases the measure") {
  for (long long chi = -8; chi <= 0; ++chi) {
    SurfaceComplexity s{chi, 0};
    long long before = complexity_measure(s);
    CHECK(complexity_measure(compress_nonseparating(s, chi)) < before);
    for (long long chi1 = chi - 6; chi1 <= 1; ++chi1) {
      long long chi2 = chi + 2 - chi1;
      if (chi2 < chi1 || chi2 > 1) continue;
      CHECK(complexity_measure(compress_separating(s, chi, chi1, chi2)) <
            before);
    }
  }
}

TEST_CASE("width comparison") {
  CHECK(compare_ghs(parse_ghs("-2;0,0"), parse_ghs("-2")) == 1);
  CHECK(compare_ghs(parse_ghs("-2"), parse_ghs("-2;0,0")) == -1);
  CHECK(compare_ghs(parse_ghs("-2"), parse_ghs("-2")) == 0);
  CHECK(compare_ghs(parse_ghs("0"), parse_ghs("-2;0,0")) == -1);
  // Levels are compared by sorted width, not input order.
  CHECK(compare_ghs(parse_ghs("0,0;-2"), parse_ghs("-2;0,0")) == 0);
  // A strict prefix precedes any extension, even by sphere levels.
  CHECK(compare_ghs(parse_ghs("-2"), parse_ghs("-2;2")) == -1);
  // Thinning the widest level wins regardless of later levels.
  CHECK(compare_ghs(parse_ghs("0;0;0"), parse_ghs("-2")) == -1);
}

TEST_CASE("text round trips") {
  CHECK(format_complexity(parse_complexity("0,-2")) == "-2,0");
  CHECK(format_ghs(parse_ghs("-2;0,0")) == "-2;0,0");
  CHECK(format_complexity({}) == "");
  CHECK_THROWS_AS(parse_complexity("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complexity(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ghs("0;;1"), std::invalid_argument);
  CHECK(parse_complexity(" -2 , 0 ") == SurfaceComplexity{-2, 0});
}
