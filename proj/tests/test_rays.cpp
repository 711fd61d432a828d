#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twonormal/dd.hpp"
#include "twonormal/matching.hpp"

using namespace twonormal;

namespace {

std::vector<BigInt> ray(std::initializer_list<long long> xs) {
  std::vector<BigInt> r;
  for (long long x : xs) r.push_back(x);
  return r;
}

}  // namespace

TEST_CASE("no equations leaves the coordinate rays") {
  auto rays = extreme_rays({}, 3);
  REQUIRE(rays.size() == 3);
  CHECK(rays[0] == ray({0, 0, 1}));
  CHECK(rays[1] == ray({0, 1, 0}));
  CHECK(rays[2] == ray({1, 0, 0}));
}

TEST_CASE("one balance equation pairs the sides") {
  // x0 = x1 inside the octant: rays (1,1,0) and (0,0,1).
  auto rays = extreme_rays({{1, -1, 0}}, 3);
  REQUIRE(rays.size() == 2);
  CHECK(rays[0] == ray({0, 0, 1}));
  CHECK(rays[1] == ray({1, 1, 0}));
}

TEST_CASE("results are primitive") {
  // x0 = 2 x1 forces the mixed ray (2,1).
  auto rays = extreme_rays({{1, -2}}, 2);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == ray({2, 1}));
}

TEST_CASE("inactive columns are pinned to zero") {
  auto rays = extreme_rays({{1, -1, 0}}, 3, {0, 1});
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == ray({1, 1, 0}));
}

TEST_CASE("infeasible systems have no rays") {
  // x0 + x1 = 0 and x0 - x1 = 0 in the open octant: only the origin.
  auto rays = extreme_rays({{1, 1}, {1, -1}}, 2);
  CHECK(rays.empty());
}

TEST_CASE("row width is checked") {
  CHECK_THROWS_AS(extreme_rays({{1, 2, 3}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(extreme_rays({{1, 2}}, 2, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(extreme_rays({{1, 2}}, 2, {5}), std::invalid_argument);
}

TEST_CASE("both routes agree on the double tetrahedron cones") {
  Triangulation tri = Triangulation::parse(kBuiltinDouble2);
  Skeleton sk = compute_skeleton(tri);
  MatchingSystem ms = build_matching_system(tri, sk);
  auto rows = ms.coefficient_rows();
  for (int q0 = 0; q0 < 3; ++q0)
    for (int q1 = 0; q1 < 3; ++q1) {
      std::vector<int> active{0, 1, 2, 3, 4 + q0,
                              16, 17, 18, 19, 16 + 4 + q1};
      auto fast = extreme_rays(rows, ms.cols, active);
      auto slow = brute_force_rays(rows, ms.cols, active);
      CHECK(fast == slow);
      CHECK_FALSE(fast.empty());
    }
}

TEST_CASE("both routes agree on random systems") {
  std::mt19937 rng(20260817);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> dim(2, 10);
  std::uniform_int_distribution<int> height(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int cols = dim(rng);
    int nrows = height(rng);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(cols));
    for (auto& row : rows)
      for (int& c : row) c = entry(rng);
    auto fast = extreme_rays(rows, cols);
    auto slow = brute_force_rays(rows, cols);
    CHECK(fast == slow);
  }
}

TEST_CASE("brute force refuses huge supports") {
  std::vector<std::vector<int>> rows{std::vector<int>(30, 1)};
  CHECK_THROWS_AS(brute_force_rays(rows, 30), std::invalid_argument);
}
