#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "twonormal/curves.hpp"
#include "twonormal/pieces.hpp"

using namespace twonormal;

TEST_CASE("admissibility needs even face crossings and real arcs") {
  CHECK(weights_admissible({1, 1, 0, 0, 1, 1}));   // quad of pair 2
  CHECK(weights_admissible({0, 1, 1, 1, 1, 0}));   // quad of pair 0
  CHECK_FALSE(weights_admissible({1, 0, 0, 0, 0, 0}));  // odd on two faces
  CHECK_FALSE(weights_admissible({2, 0, 0, 0, 0, 2}));  // negative arc count
  CHECK_FALSE(weights_admissible({0, 0, 0, 0, 0, -2}));
}

TEST_CASE("arc counts of the catalogued pieces") {
  // Triangle at vertex 0 crosses edges 01, 02, 03 once.
  ArcCounts tri = arc_counts({1, 1, 1, 0, 0, 0});
  CHECK(tri.at(1, 0) == 1);
  CHECK(tri.at(2, 0) == 1);
  CHECK(tri.at(3, 0) == 1);
  CHECK(tri.total() == 3);

  // Quad separating pair 0 misses edges 01 and 23.
  ArcCounts quad = arc_counts({0, 1, 1, 1, 1, 0});
  CHECK(quad.total() == 4);
  for (int f = 0; f < 4; ++f)
    for (int v = 0; v < 4; ++v)
      if (f != v) CHECK(quad.at(f, v) <= 1);

  // Octagon on pair 0: face 0 arcs are (0, 1, 1) at corners 1, 2, 3.
  ArcCounts oct = arc_counts({2, 1, 1, 1, 1, 2});
  CHECK(oct.at(0, 1) == 0);
  CHECK(oct.at(0, 2) == 1);
  CHECK(oct.at(0, 3) == 1);
  CHECK(oct.total() == 8);

  // First dodecagon: face 0 arcs are (2, 1, 0).
  ArcCounts dodec = arc_counts({1, 2, 3, 3, 2, 1});
  CHECK(dodec.at(0, 1) == 2);
  CHECK(dodec.at(0, 2) == 1);
  CHECK(dodec.at(0, 3) == 0);
  CHECK(dodec.total() == 12);

  CHECK_THROWS_AS(arc_counts({1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("connected curve census up to length 24") {
  auto types = connected_curve_types(24);
  CHECK(types.size() == 40);

  std::map<int, int> histogram;
  for (const auto& w : types) {
    CHECK(weights_admissible(w));
    CHECK(is_connected_curve(w));
    histogram[curve_length(w)] += 1;
  }
  std::map<int, int> expected{{3, 4},  {4, 3},  {8, 3}, {12, 6},
                              {16, 6}, {20, 12}, {24, 6}};
  CHECK(histogram == expected);

  // Sorted and free of duplicates.
  std::set<std::array<int, 6>> unique(types.begin(), types.end());
  CHECK(unique.size() == types.size());
  CHECK(std::is_sorted(types.begin(), types.end()));
}

TEST_CASE("tracing splits parallel copies") {
  // Two parallel triangles at vertex 0.
  auto loops = trace_components({2, 2, 2, 0, 0, 0});
  CHECK(loops.size() == 2);
  for (const TracedLoop& l : loops) {
    CHECK(l.length == 3);
    CHECK(l.weights == std::array<int, 6>{1, 1, 1, 0, 0, 0});
  }

  // A triangle and a disjoint quad.
  auto mixed = trace_components({1, 2, 2, 1, 1, 0});
  CHECK(mixed.size() == 2);

  // One octagon stays one loop.
  CHECK(is_connected_curve({2, 1, 1, 1, 1, 2}));
  CHECK_FALSE(is_connected_curve({2, 2, 2, 0, 0, 0}));
}

TEST_CASE("full trace provides crossing ownership") {
  std::array<int, 6> w{2, 1, 1, 1, 1, 2};  // octagon on pair 0
  TracedSystem ts = trace_system(w);
  CHECK(ts.loops.size() == 1);
  CHECK(ts.loops[0].size() == 8);
  CHECK(ts.loop_weights[0] == w);
  for (int e = 0; e < 6; ++e) {
    CHECK(static_cast<int>(ts.crossing_loop[e].size()) == w[e]);
    for (int owner : ts.crossing_loop[e]) CHECK(owner == 0);
  }

  // Triangle plus quad: crossings split between the two loops.
  TracedSystem two = trace_system({1, 2, 2, 1, 1, 0});
  CHECK(two.loops.size() == 2);
  std::set<int> owners;
  for (int e = 0; e < 6; ++e)
    for (int owner : two.crossing_loop[e]) owners.insert(owner);
  CHECK(owners == std::set<int>{0, 1});
}

TEST_CASE("arc endpoint positions interleave corner stacks") {
  // Edge 0 = {0, 1} carrying weight 3: two arcs at corner 0 (depths 1, 2)
  // then the corner-1 arc at the outermost remaining position.
  std::array<int, 6> w{3, 2, 2, 1, 1, 0};  // two vertex-0 triangles + one at 1
  CHECK(weights_admissible(w));
  CHECK(arc_endpoint_position(0, 0, 1, w) == 0);
  CHECK(arc_endpoint_position(0, 0, 2, w) == 1);
  CHECK(arc_endpoint_position(1, 0, 1, w) == 2);
}

TEST_CASE("realizability of piece boundary pairs matches compatibility") {
  const auto& catalog = piece_catalog();
  for (const PieceType& a : catalog)
    for (const PieceType& b : catalog) {
      bool words = disjointly_realizable(a.weights(), b.weights());
      bool traced = disjointly_realizable_by_trace(a.weights(), b.weights());
      CHECK(words == traced);
      CHECK(words == pieces_compatible(a, b));
    }
}

TEST_CASE("the two realizability routes agree on curve pairs") {
  auto types = connected_curve_types(12);
  for (const auto& a : types)
    for (const auto& b : types) {
      CHECK(disjointly_realizable(a, b) ==
            disjointly_realizable_by_trace(a, b));
    }
}

TEST_CASE("distinct slopes never coexist") {
  // Quad of pair 0 against the octagon of pair 1.
  CHECK_FALSE(disjointly_realizable({0, 1, 1, 1, 1, 0}, {1, 2, 1, 1, 2, 1}));
  // An octagon and the quad of the same pair still cross.
  CHECK_FALSE(disjointly_realizable({2, 1, 1, 1, 1, 2}, {0, 1, 1, 1, 1, 0}));
  // Triangles coexist with everything.
  for (const PieceType& p : piece_catalog())
    CHECK(disjointly_realizable({1, 1, 1, 0, 0, 0}, p.weights()));
}

TEST_CASE("families check pairwise realizability over distinct types") {
  CHECK(family_disjointly_realizable(
      {{1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0}}));
  CHECK_FALSE(family_disjointly_realizable(
      {{0, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 0, 1}}));
}
