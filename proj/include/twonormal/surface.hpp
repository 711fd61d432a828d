#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "twonormal/bigint.hpp"
#include "twonormal/skeleton.hpp"
#include "twonormal/triangulation.hpp"

namespace twonormal {

// A tube runs inside one tetrahedron parallel to an edge, joining the
// surface pieces that cross that edge at stacking positions slot and
// slot+1 (counted from the lower-numbered local endpoint).
struct TubeDecoration {
  int tet = 0;
  int edge = 0;
  int slot = 0;
  auto operator<=>(const TubeDecoration&) const = default;
};

struct ComponentInfo {
  long long euler = 0;
  bool orientable = true;
  bool closed = true;
  bool sphere = false;
  std::string cls;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int octagons = 0;
  int dodecagons = 0;
  int tubes = 0;
};

struct BuiltSurface {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  long long euler_cells = 0;   // from the assembled complex
  long long euler_vector = 0;  // from coordinates and tube count alone
  bool closed = true;
  std::vector<long long> edge_weights;  // per edge class
  std::vector<ComponentInfo> components;
  std::string cls;  // classification of the whole surface

  bool connected() const { return components.size() == 1; }
  long long euler() const { return euler_cells; }
};

// Checks that the coordinates and tubes describe buildable geometry:
// coordinate block shape, the one-quad-family rule, piece compatibility
// inside each tetrahedron, at most one long-boundary piece per tetrahedron,
// exceptional piece multiplicities, and the tube attachment rules.  Returns
// the violation label, or nullopt when buildable.  Pattern rules (how many
// exceptional features a mode allows) are deliberately not checked here.
std::optional<std::string> buildable_violation(
    const Triangulation& tri, const Skeleton& sk,
    const std::vector<BigInt>& coords,
    const std::vector<TubeDecoration>& tubes, bool allow_nested_tubes);

// Assembles the surface cell complex and reports component data.  Throws
// std::invalid_argument when the input is not buildable or does not satisfy
// the matching equations, and std::logic_error if the two Euler routes ever
// disagree.
BuiltSurface reconstruct(const Triangulation& tri, const Skeleton& sk,
                         const std::vector<BigInt>& coords,
                         const std::vector<TubeDecoration>& tubes,
                         bool allow_nested_tubes = false);

// Classification labels from content counts ("normal", "two-octagons", ...).
std::string classify_content(int octagons, int tubes, int dodecagons);

}  // namespace twonormal
