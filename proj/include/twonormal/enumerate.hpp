#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twonormal/bigint.hpp"
#include "twonormal/skeleton.hpp"
#include "twonormal/surface.hpp"
#include "twonormal/triangulation.hpp"

namespace twonormal {

// What the census hunts for: plain normal surfaces, surfaces with exactly
// one exceptional feature (octagon or tube), or surfaces with two features
// (a dodecagon counts as two).
enum class SurfaceMode { Normal, AlmostNormal, TwoNormal };

const char* mode_name(SurfaceMode mode);
std::optional<SurfaceMode> parse_mode(const std::string& name);

struct EnumerationOptions {
  SurfaceMode mode = SurfaceMode::Normal;
  bool allow_nested_tubes = false;
  bool require_closed = false;
  int max_tets = 8;
  int max_curve_length = 24;
  int threads = 1;
};

struct Admissibility {
  bool ok = true;
  std::string violation;  // empty when ok
};

// Buildability plus the mode's pattern rule.  The violation label names the
// first rule broken.
Admissibility is_admissible(const Triangulation& tri, const Skeleton& sk,
                            const std::vector<BigInt>& coords,
                            const std::vector<TubeDecoration>& tubes,
                            const EnumerationOptions& opts);

struct CensusEntry {
  std::vector<BigInt> coords;
  std::vector<TubeDecoration> tubes;
  BuiltSurface surface;
};

// Vertex surfaces of the matching cone in the requested mode, with every
// admissible tube decoration, deduplicated and sorted by coordinates then
// tubes.  Throws on invalid triangulations or a tetrahedron count above
// opts.max_tets.
std::vector<CensusEntry> enumerate_census(const Triangulation& tri,
                                          const EnumerationOptions& opts);

}  // namespace twonormal
