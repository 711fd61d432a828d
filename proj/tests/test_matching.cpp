#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twonormal/matching.hpp"

using namespace twonormal;

namespace {

std::vector<int> residual(const MatchingSystem& ms,
                          const std::vector<int>& x) {
  std::vector<int> r;
  for (const MatchingRow& row : ms.rows) {
    int dot = 0;
    for (int i = 0; i < ms.cols; ++i) dot += row.coeffs[i] * x[i];
    r.push_back(dot);
  }
  return r;
}

bool in_kernel(const MatchingSystem& ms, const std::vector<int>& x) {
  for (int v : residual(ms, x))
    if (v != 0) return false;
  return true;
}

std::vector<int> unit(int cols, std::initializer_list<int> ones) {
  std::vector<int> x(cols, 0);
  for (int i : ones) x[i] = 1;
  return x;
}

}  // namespace

TEST_CASE("double tetrahedron system shape") {
  Triangulation tri = Triangulation::parse(kBuiltinDouble2);
  Skeleton sk = compute_skeleton(tri);
  MatchingSystem ms = build_matching_system(tri, sk);
  CHECK(ms.cols == 32);
  CHECK(ms.rows.size() == 12);  // three corners for each of four walls
  CHECK(ms.col_labels.size() == 32);
  CHECK(ms.col_labels[0] == "t0.tri0");
  CHECK(ms.col_labels[16 + 7] == "t1.oct0");
  for (const MatchingRow& row : ms.rows) {
    REQUIRE(row.coeffs.size() == 32);
    for (int c : row.coeffs) {
      CHECK(c >= -2);
      CHECK(c <= 2);
    }
  }
}

TEST_CASE("boundary-only triangulations have no equations") {
  Triangulation tri = Triangulation::parse(kBuiltinSingle);
  Skeleton sk = compute_skeleton(tri);
  MatchingSystem ms = build_matching_system(tri, sk);
  CHECK(ms.cols == 16);
  CHECK(ms.rows.empty());
}

TEST_CASE("hand-checked kernel membership") {
  Triangulation tri = Triangulation::parse(kBuiltinDouble2);
  Skeleton sk = compute_skeleton(tri);
  MatchingSystem ms = build_matching_system(tri, sk);

  // A lone quad in one tetrahedron leaves four unbalanced corners.
  std::vector<int> lone_quad = unit(32, {4});
  auto r = residual(ms, lone_quad);
  int nonzero = 0;
  for (int v : r) {
    CHECK(v >= -1);
    CHECK(v <= 1);
    if (v != 0) ++nonzero;
  }
  CHECK(nonzero == 4);

  // The same quad on both sides balances.
  CHECK(in_kernel(ms, unit(32, {4, 16 + 4})));

  // Vertex links: matching triangles in the two tetrahedra.
  for (int v = 0; v < 4; ++v) CHECK(in_kernel(ms, unit(32, {v, 16 + v})));

  // Two matching octagons balance.
  CHECK(in_kernel(ms, unit(32, {7, 16 + 7})));

  // A lone dodecagon does not.
  CHECK_FALSE(in_kernel(ms, unit(32, {10})));

  // A lone triangle does not.
  CHECK_FALSE(in_kernel(ms, unit(32, {2})));
}

TEST_CASE("rows name their wall and corner") {
  Triangulation tri = Triangulation::parse(kBuiltinDouble2);
  Skeleton sk = compute_skeleton(tri);
  MatchingSystem ms = build_matching_system(tri, sk);
  for (const MatchingRow& row : ms.rows) {
    REQUIRE(row.face_class >= 0);
    REQUIRE(row.face_class < static_cast<int>(sk.faces.size()));
    const FaceClass& f = sk.faces[row.face_class];
    CHECK_FALSE(f.boundary());
    CHECK(face_contains(f.face0, row.corner));
  }
}
