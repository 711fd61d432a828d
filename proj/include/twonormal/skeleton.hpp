#pragma once

#include <array>
#include <utility>
#include <vector>

#include "twonormal/tetra.hpp"
#include "twonormal/triangulation.hpp"

namespace twonormal {

// One appearance of an edge class inside a tetrahedron.  sign is +1 when the
// class orientation runs from the lower-numbered local endpoint to the
// higher-numbered one.
struct EdgeEmbedding {
  int tet = 0;
  int edge = 0;
  int sign = 1;
  bool operator==(const EdgeEmbedding&) const = default;
};

struct EdgeClass {
  std::vector<EdgeEmbedding> embeddings;  // in walk order around the edge
  bool cyclic = true;                     // false when the edge meets boundary
  int degree() const { return static_cast<int>(embeddings.size()); }
};

struct VertexClass {
  std::vector<std::pair<int, int>> corners;  // (tet, vertex), sorted
};

// Either an interior wall between two tetrahedron faces or a boundary face.
// (tet0, face0) is the canonical side; to_other carries its vertex labels to
// the far side when one exists.
struct FaceClass {
  int tet0 = 0;
  int face0 = 0;
  int tet1 = -1;
  int face1 = -1;
  Permutation4 to_other;
  bool boundary() const { return tet1 < 0; }
};

struct Skeleton {
  int tet_count = 0;
  std::vector<EdgeClass> edges;
  std::vector<VertexClass> vertices;
  std::vector<FaceClass> faces;

  // Lookup tables indexed by (tet, local index).
  std::vector<std::array<int, 6>> edge_class_of;
  std::vector<std::array<int, 6>> edge_sign_of;
  std::vector<std::array<int, 6>> edge_pos_of;  // index into embeddings
  std::vector<std::array<int, 4>> vertex_class_of;
  std::vector<std::array<int, 4>> face_class_of;

  int euler() const {
    return static_cast<int>(vertices.size()) -
           static_cast<int>(edges.size()) + static_cast<int>(faces.size()) -
           tet_count;
  }
};

// Builds the identification data for a validated triangulation.  Throws
// std::invalid_argument when an edge is identified with itself reversing
// orientation; crossing positions along such an edge are not well defined.
Skeleton compute_skeleton(const Triangulation& tri);

}  // namespace twonormal
