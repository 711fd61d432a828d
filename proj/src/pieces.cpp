#include "twonormal/pieces.hpp"

#include <cassert>
#include <stdexcept>

namespace twonormal {

namespace {

constexpr std::array<std::array<int, 6>, 6> kDodecagonWeights = {{
    {1, 2, 3, 3, 2, 1},
    {1, 3, 2, 2, 3, 1},
    {2, 1, 3, 3, 1, 2},
    {2, 3, 1, 1, 3, 2},
    {3, 1, 2, 2, 1, 3},
    {3, 2, 1, 1, 2, 3},
}};

}  // namespace

std::array<int, 6> PieceType::weights() const {
  std::array<int, 6> w{};
  switch (kind) {
    case PieceKind::Triangle:
      for (int e = 0; e < 6; ++e)
        if (edge_contains(e, index)) w[e] = 1;
      break;
    case PieceKind::Quad:
      for (int e = 0; e < 6; ++e)
        if (e != index && e != opposite_edge(index)) w[e] = 1;
      break;
    case PieceKind::Octagon:
      for (int e = 0; e < 6; ++e)
        w[e] = (e == index || e == opposite_edge(index)) ? 2 : 1;
      break;
    case PieceKind::Dodecagon:
      w = kDodecagonWeights[index];
      break;
  }
  return w;
}

int PieceType::boundary_length() const {
  switch (kind) {
    case PieceKind::Triangle: return 3;
    case PieceKind::Quad: return 4;
    case PieceKind::Octagon: return 8;
    case PieceKind::Dodecagon: return 12;
  }
  assert(false);
  return 0;
}

std::string PieceType::label(int tet) const {
  const char* name = nullptr;
  switch (kind) {
    case PieceKind::Triangle: name = "tri"; break;
    case PieceKind::Quad: name = "quad"; break;
    case PieceKind::Octagon: name = "oct"; break;
    case PieceKind::Dodecagon: name = "dodec"; break;
  }
  return "t" + std::to_string(tet) + "." + name + std::to_string(index);
}

int PieceType::coordinate() const {
  switch (kind) {
    case PieceKind::Triangle: return index;
    case PieceKind::Quad: return 4 + index;
    case PieceKind::Octagon: return 7 + index;
    case PieceKind::Dodecagon: return 10 + index;
  }
  assert(false);
  return -1;
}

const std::vector<PieceType>& piece_catalog() {
  static const std::vector<PieceType> catalog = [] {
    std::vector<PieceType> out;
    for (int v = 0; v < 4; ++v) out.push_back({PieceKind::Triangle, v});
    for (int k = 0; k < 3; ++k) out.push_back({PieceKind::Quad, k});
    for (int k = 0; k < 3; ++k) out.push_back({PieceKind::Octagon, k});
    for (int j = 0; j < 6; ++j) out.push_back({PieceKind::Dodecagon, j});
    assert(static_cast<int>(out.size()) == kPieceTypesPerTet);
    for (int s = 0; s < kPieceTypesPerTet; ++s)
      assert(out[s].coordinate() == s);
    return out;
  }();
  return catalog;
}

PieceType piece_from_coordinate(int slot) {
  assert(slot >= 0 && slot < kPieceTypesPerTet);
  return piece_catalog()[slot];
}

std::optional<PieceType> piece_from_weights(const std::array<int, 6>& w) {
  for (const PieceType& pt : piece_catalog())
    if (pt.weights() == w) return pt;
  return std::nullopt;
}

PieceType require_piece(const std::array<int, 6>& w) {
  if (!is_connected_curve(w))
    throw std::invalid_argument(
        "piece boundary must be a single connected curve");
  if (auto pt = piece_from_weights(w)) return *pt;
  throw std::invalid_argument(
      "a disk piece boundary has at most 12 sides; curve of length " +
      std::to_string(curve_length(w)) + " refused");
}

bool pieces_compatible(PieceType a, PieceType b) {
  if (a.kind == PieceKind::Triangle || b.kind == PieceKind::Triangle)
    return true;
  return a == b;  // parallel copies only
}

}  // namespace twonormal
