#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twonormal/pieces.hpp"
#include "twonormal/surface.hpp"

using namespace twonormal;

namespace {

struct Fixture {
  Triangulation tri;
  Skeleton sk;
  Fixture(const char* text)
      : tri(Triangulation::parse(text)), sk(compute_skeleton(tri)) {}

  BuiltSurface build(std::initializer_list<std::pair<int, int>> entries,
                     std::vector<TubeDecoration> tubes = {},
                     bool allow_nested = false) const {
    std::vector<BigInt> c(kPieceTypesPerTet * tri.tet_count(), 0);
    for (auto [slot, value] : entries) c[slot] = value;
    return reconstruct(tri, sk, c, tubes, allow_nested);
  }
};

}  // namespace

TEST_CASE("classification labels") {
  CHECK(classify_content(0, 0, 0) == "normal");
  CHECK(classify_content(1, 0, 0) == "almost-normal-octagon");
  CHECK(classify_content(0, 1, 0) == "almost-normal-tube");
  CHECK(classify_content(2, 0, 0) == "two-octagons");
  CHECK(classify_content(0, 2, 0) == "two-tubes");
  CHECK(classify_content(1, 1, 0) == "octagon-tube");
  CHECK(classify_content(0, 0, 1) == "dodecagon");
  CHECK(classify_content(2, 1, 0) == "nonstandard");
  CHECK(classify_content(0, 0, 2) == "nonstandard");
  CHECK(classify_content(1, 0, 1) == "nonstandard");
}

TEST_CASE("vertex link cells") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{0, 1}, {16, 1}});
  CHECK(s.vertices == 3);
  CHECK(s.edges == 3);
  CHECK(s.faces == 2);
  CHECK(s.euler_cells == 2);
  CHECK(s.euler_vector == 2);
  CHECK(s.closed);
  CHECK(s.connected());
  CHECK(s.components[0].sphere);
  CHECK(s.components[0].orientable);
  CHECK(s.cls == "normal");
}

TEST_CASE("double quad cells") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{4, 1}, {16 + 4, 1}});
  CHECK(s.vertices == 4);
  CHECK(s.edges == 4);
  CHECK(s.faces == 2);
  CHECK(s.euler() == 2);
  CHECK(s.components[0].sphere);
}

TEST_CASE("double octagon cells") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{7, 1}, {16 + 7, 1}});
  CHECK(s.vertices == 8);
  CHECK(s.edges == 8);
  CHECK(s.faces == 2);
  CHECK(s.euler() == 2);
  CHECK(s.components[0].sphere);
  CHECK(s.cls == "two-octagons");
  CHECK(s.components[0].octagons == 2);
}

TEST_CASE("parallel copies scale the cell counts") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{0, 2}, {16, 2}});
  CHECK(s.euler() == 4);
  CHECK(s.components.size() == 2);
  for (const ComponentInfo& c : s.components) {
    CHECK(c.euler == 2);
    CHECK(c.sphere);
  }
}

TEST_CASE("matching violations are refused") {
  Fixture fx(kBuiltinDouble2);
  std::vector<BigInt> lone(32, 0);
  lone[0] = 1;  // a triangle only in the first tetrahedron
  CHECK_THROWS_WITH_AS(reconstruct(fx.tri, fx.sk, lone, {}),
                       "coordinates violate the matching equations",
                       std::invalid_argument);

  std::vector<BigInt> bad(32, 0);
  bad[4] = 1;
  bad[16 + 5] = 1;  // quads of different pairs on the two sides
  CHECK_THROWS_AS(reconstruct(fx.tri, fx.sk, bad, {}),
                  std::invalid_argument);
}

TEST_CASE("unbuildable coordinates are refused with their code") {
  Fixture fx(kBuiltinSingle);
  std::vector<BigInt> clash(16, 0);
  clash[4] = 1;
  clash[7] = 1;
  CHECK_THROWS_WITH_AS(reconstruct(fx.tri, fx.sk, clash, {}),
                       "not buildable: incompatible-pieces",
                       std::invalid_argument);
}

TEST_CASE("the empty surface reconstructs to nothing") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({});
  CHECK(s.vertices == 0);
  CHECK(s.edges == 0);
  CHECK(s.faces == 0);
  CHECK(s.euler() == 0);
  CHECK(s.components.empty());
}

TEST_CASE("boundary pieces report open components") {
  Fixture fx(kBuiltinSingle);
  BuiltSurface s = fx.build({{0, 1}});
  CHECK(s.euler() == 1);
  CHECK_FALSE(s.closed);
  CHECK(s.connected());
  CHECK_FALSE(s.components[0].sphere);
  CHECK(s.components[0].orientable);
}

TEST_CASE("a twisted band comes out nonorientable") {
  // One tetrahedron with faces 0 and 1 glued by a three-cycle; the triangle
  // at vertex 2 closes into a band whose core is traversed twice the same
  // way.
  Fixture fx("tet 0: 0:1320 0:3021 - -\n");
  BuiltSurface s = fx.build({{2, 1}});
  CHECK(s.connected());
  CHECK(s.euler() == 0);
  CHECK_FALSE(s.components[0].orientable);
  CHECK_FALSE(s.closed);
}

TEST_CASE("a tube joins two vertex links into one sphere") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface flat = fx.build({{0, 1}, {1, 1}, {16, 1}, {16 + 1, 1}});
  CHECK(flat.euler() == 4);
  CHECK(flat.components.size() == 2);

  BuiltSurface tubed =
      fx.build({{0, 1}, {1, 1}, {16, 1}, {16 + 1, 1}}, {{0, 0, 0}});
  CHECK(tubed.euler() == 2);
  CHECK(tubed.connected());
  CHECK(tubed.closed);
  CHECK(tubed.components[0].sphere);
  CHECK(tubed.cls == "almost-normal-tube");
  CHECK(tubed.components[0].tubes == 1);
  CHECK(tubed.euler_cells == tubed.euler_vector);
}

TEST_CASE("two tubes across stacked links form a pair of pants") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s =
      fx.build({{0, 3}, {16, 3}}, {{0, 0, 0}, {0, 0, 1}});
  CHECK(s.euler() == 2);
  CHECK(s.connected());
  CHECK(s.closed);
  CHECK(s.components[0].sphere);
  CHECK(s.cls == "two-tubes");
}

TEST_CASE("a self tube turns the octagon sphere into a torus") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{7, 1}, {16 + 7, 1}}, {{0, 0, 0}});
  CHECK(s.euler() == 0);
  CHECK(s.connected());
  CHECK(s.closed);
  CHECK(s.components[0].orientable);
  CHECK_FALSE(s.components[0].sphere);
  CHECK(s.cls == "nonstandard");  // two octagons plus a tube
  CHECK(s.euler_cells == s.euler_vector);
}

TEST_CASE("nested tubes drop the euler characteristic twice") {
  Fixture fx(kBuiltinDouble2);
  // Two tubes through the one gap between stacked vertex links: the first
  // merges the spheres, the second adds a handle.
  std::vector<BigInt> c(32, 0);
  c[0] = 2;
  c[16] = 2;
  std::vector<TubeDecoration> twice{{0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_WITH_AS(reconstruct(fx.tri, fx.sk, c, twice, false),
                       "not buildable: nested-tubes", std::invalid_argument);
  BuiltSurface s = reconstruct(fx.tri, fx.sk, c, twice, true);
  CHECK(s.euler() == 0);
  CHECK(s.connected());
  CHECK(s.closed);
  CHECK(s.components[0].orientable);
  CHECK(s.euler_cells == s.euler_vector);
}

TEST_CASE("tube rejections carry their codes") {
  Fixture fx(kBuiltinSingle);
  std::vector<BigInt> dodec(16, 0);
  dodec[10] = 1;
  CHECK_THROWS_WITH_AS(reconstruct(fx.tri, fx.sk, dodec, {{0, 1, 0}}),
                       "not buildable: tube-self-boundary-length",
                       std::invalid_argument);
}

TEST_CASE("surface euler matches the component sum") {
  Fixture fx(kBuiltinDouble2);
  BuiltSurface s = fx.build({{0, 2}, {4, 1}, {16, 2}, {16 + 4, 1}});
  long long total = 0;
  for (const ComponentInfo& c : s.components) total += c.euler;
  CHECK(total == s.euler());
  CHECK(s.components.size() == 3);
}
