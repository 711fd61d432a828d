#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twonormal/curves.hpp"

namespace twonormal {

enum class PieceKind { Triangle, Quad, Octagon, Dodecagon };

// index meaning: Triangle = the cut-off vertex 0..3; Quad and Octagon = the
// separated opposite edge pair 0..2 (pair k holds edges k and 5-k);
// Dodecagon = slot 0..5 in the lexicographic list of the six weight vectors.
struct PieceType {
  PieceKind kind = PieceKind::Triangle;
  int index = 0;
  bool operator==(const PieceType&) const = default;
  std::array<int, 6> weights() const;
  int boundary_length() const;  // 3, 4, 8 or 12
  std::string label(int tet) const;  // "t0.quad2" style
  int coordinate() const;  // slot within a per-tet coordinate block
};

inline constexpr int kPieceTypesPerTet = 16;

// The sixteen per-tet piece types in coordinate order:
// tri0..tri3, quad0..quad2, oct0..oct2, dodec0..dodec5.
const std::vector<PieceType>& piece_catalog();

PieceType piece_from_coordinate(int slot);

// Recognizes the weight vector of a catalogued piece boundary.
std::optional<PieceType> piece_from_weights(const std::array<int, 6>& w);

// Like piece_from_weights but throws: disconnected systems are refused, and
// so are connected curves longer than 12 (no disk piece carries a 16-gon or
// 20-gon boundary).
PieceType require_piece(const std::array<int, 6>& w);

// Whether two piece types embed disjointly in one tetrahedron.  Triangles
// coexist with everything; otherwise only parallel copies of one type do.
bool pieces_compatible(PieceType a, PieceType b);

// A dodecagon crosses every edge, so it never coexists with a quad.
inline constexpr bool kDodecagonQuadCompatible = false;

}  // namespace twonormal
