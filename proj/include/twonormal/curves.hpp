#pragma once

#include <array>
#include <vector>

#include "twonormal/tetra.hpp"

namespace twonormal {

// Curves on the boundary of a single tetrahedron that meet every face in
// arcs cutting off one corner.  A curve system is recorded by its six edge
// crossing counts, indexed by edge_index.

// arcs[f][i] = number of arcs in face f cutting off corner kFaceVerts[f][i].
struct ArcCounts {
  std::array<std::array<int, 3>, 4> arcs{};
  int at(int face, int vertex) const;
  int total() const;
};

// Crossing parity on every face plus no negative arc count.
bool weights_admissible(const std::array<int, 6>& w);

// Throws std::invalid_argument when the weights are not admissible.
ArcCounts arc_counts(const std::array<int, 6>& w);

inline int curve_length(const std::array<int, 6>& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

// Arc arrangement and crossing pairings are forced: in a face the arcs at one
// corner are nested, and along an edge {x, y} (x < y) seen from face f the
// crossings hold the corner-x arcs by depth followed by the corner-y arcs in
// reverse.  Tracing through the forced pairings splits the system into loops.

// Position (from the lower-numbered endpoint of edge e) of the endpoint of
// the depth-j arc cutting off `vertex`.  Depth 1 is innermost.
int arc_endpoint_position(int vertex, int e, int depth,
                          const std::array<int, 6>& w);
struct TracedLoop {
  int length = 0;                 // number of arcs = number of crossings
  std::array<int, 6> weights{};  // crossings of this loop per edge
};
std::vector<TracedLoop> trace_components(const std::array<int, 6>& w);

bool is_connected_curve(const std::array<int, 6>& w);

// Full trace with arc and crossing identities, for building cell complexes.
// Loops come out as cyclic walks: at step i the curve sits on crossing
// (edge, position) and leaves along arc toward step i+1's crossing.
struct TracedArc {
  int face = 0;
  int vertex = 0;
  int depth = 0;  // 1 = innermost at the corner
};
struct LoopStep {
  int edge = 0;
  int position = 0;
  int arc = 0;
};
struct TracedSystem {
  std::vector<TracedArc> arcs;
  std::vector<std::vector<LoopStep>> loops;
  std::array<std::vector<int>, 6> crossing_loop;  // loop id per (edge, pos)
  std::vector<std::array<int, 6>> loop_weights;
};
TracedSystem trace_system(const std::array<int, 6>& w);

// All connected curve types of length at most max_len, lexicographically
// sorted by weight vector.
std::vector<std::array<int, 6>> connected_curve_types(int max_len);

// True when the two systems can be drawn disjointly: searches for a
// two-letter labelling of all arc slots whose induced words agree along all
// six edges.
bool disjointly_realizable(const std::array<int, 6>& a,
                           const std::array<int, 6>& b);

// Independent route to the same answer: traces the combined weights and
// compares the forced loop decomposition against the two inputs' own
// decompositions.
bool disjointly_realizable_by_trace(const std::array<int, 6>& a,
                                    const std::array<int, 6>& b);

// Pairwise realizability over distinct types; parallel copies of one type
// are always compatible.
bool family_disjointly_realizable(
    const std::vector<std::array<int, 6>>& curves);

}  // namespace twonormal
