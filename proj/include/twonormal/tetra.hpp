#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twonormal {

// Vertices of a tetrahedron carry labels 0..3.  Face i is the face opposite
// vertex i, so face i consists of the three vertices != i.  Edges are indexed
// 0..5 in lexicographic order of their endpoint pairs; edge e and edge 5-e
// are opposite (disjoint) edges.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVerts = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr std::array<std::array<int, 3>, 4> kFaceVerts = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

constexpr int edge_index(int a, int b) {
  assert(a != b && a >= 0 && a < 4 && b >= 0 && b < 4);
  if (a > b) {
    int t = a;
    a = b;
    b = t;
  }
  // (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
  if (a == 0) return b - 1;
  if (a == 1) return b + 1;
  return 5;
}

constexpr int opposite_edge(int e) { return 5 - e; }

constexpr bool edge_contains(int e, int v) {
  return kEdgeVerts[e][0] == v || kEdgeVerts[e][1] == v;
}

constexpr bool face_contains(int f, int v) { return f != v; }

// The two faces containing edge e, in increasing order.
constexpr std::array<int, 2> faces_of_edge(int e) {
  std::array<int, 2> out{-1, -1};
  int n = 0;
  for (int f = 0; f < 4; ++f)
    if (!edge_contains(e, f)) out[n++] = f;
  return out;
}

// The two edges of face f meeting at its corner v, in increasing order.
constexpr std::array<int, 2> corner_edges(int f, int v) {
  assert(face_contains(f, v));
  std::array<int, 2> out{-1, -1};
  int n = 0;
  for (int u = 0; u < 4; ++u)
    if (u != v && u != f) out[n++] = edge_index(v, u);
  if (out[0] > out[1]) {
    int t = out[0];
    out[0] = out[1];
    out[1] = t;
  }
  return out;
}

// The edge of face f that does not touch corner v.
constexpr int face_edge_opposite(int f, int v) {
  assert(face_contains(f, v));
  std::array<int, 2> other{-1, -1};
  int n = 0;
  for (int u = 0; u < 4; ++u)
    if (u != v && u != f) other[n++] = u;
  return edge_index(other[0], other[1]);
}

// A permutation of the labels 0..3, used for face gluings.
class Permutation4 {
 public:
  constexpr Permutation4() : img_{0, 1, 2, 3} {}
  constexpr explicit Permutation4(std::array<std::uint8_t, 4> img) : img_(img) {}

  static constexpr Permutation4 identity() { return Permutation4(); }

  constexpr int operator()(int v) const {
    assert(v >= 0 && v < 4);
    return img_[static_cast<std::size_t>(v)];
  }

  constexpr bool is_valid() const {
    int seen = 0;
    for (int v = 0; v < 4; ++v) {
      if (img_[v] > 3) return false;
      seen |= 1 << img_[v];
    }
    return seen == 0xf;
  }

  constexpr Permutation4 inverse() const {
    std::array<std::uint8_t, 4> inv{};
    for (int v = 0; v < 4; ++v) inv[img_[v]] = static_cast<std::uint8_t>(v);
    return Permutation4(inv);
  }

  // (a.then(b))(v) == b(a(v))
  constexpr Permutation4 then(const Permutation4& b) const {
    std::array<std::uint8_t, 4> out{};
    for (int v = 0; v < 4; ++v)
      out[v] = static_cast<std::uint8_t>(b(img_[v]));
    return Permutation4(out);
  }

  static std::optional<Permutation4> parse(std::string_view s) {
    if (s.size() != 4) return std::nullopt;
    std::array<std::uint8_t, 4> img{};
    for (int i = 0; i < 4; ++i) {
      if (s[i] < '0' || s[i] > '3') return std::nullopt;
      img[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    Permutation4 p(img);
    if (!p.is_valid()) return std::nullopt;
    return p;
  }

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
    return s;
  }

  constexpr bool operator==(const Permutation4&) const = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

}  // namespace twonormal
