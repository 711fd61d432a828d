#include "twonormal/curves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twonormal {

namespace {

int corner_slot(int face, int vertex) {
  for (int i = 0; i < 3; ++i)
    if (kFaceVerts[face][i] == vertex) return i;
  assert(false && "vertex not in face");
  return -1;
}

}  // namespace

int ArcCounts::at(int face, int vertex) const {
  return arcs[face][corner_slot(face, vertex)];
}

int ArcCounts::total() const {
  int s = 0;
  for (const auto& row : arcs)
    for (int x : row) s += x;
  return s;
}

bool weights_admissible(const std::array<int, 6>& w) {
  for (int x : w)
    if (x < 0) return false;
  for (int f = 0; f < 4; ++f) {
    for (int v : kFaceVerts[f]) {
      auto ce = corner_edges(f, v);
      int opp = face_edge_opposite(f, v);
      int num = w[ce[0]] + w[ce[1]] - w[opp];
      if (num < 0 || num % 2 != 0) return false;
    }
  }
  return true;
}

ArcCounts arc_counts(const std::array<int, 6>& w) {
  if (!weights_admissible(w))
    throw std::invalid_argument("edge weights do not bound a curve system");
  ArcCounts out;
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 3; ++i) {
      int v = kFaceVerts[f][i];
      auto ce = corner_edges(f, v);
      int opp = face_edge_opposite(f, v);
      out.arcs[f][i] = (w[ce[0]] + w[ce[1]] - w[opp]) / 2;
    }
  return out;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int arc_endpoint_position(int vertex, int e, int depth,
                          const std::array<int, 6>& w) {
  assert(edge_contains(e, vertex));
  int x = kEdgeVerts[e][0];
  return (vertex == x) ? depth - 1 : w[e] - depth;
}

std::vector<TracedLoop> trace_components(const std::array<int, 6>& w) {
  ArcCounts n = arc_counts(w);

  // Arc ids laid out per (face, corner slot) block.
  int offset[4][3];
  int total = 0;
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 3; ++i) {
      offset[f][i] = total;
      total += n.arcs[f][i];
    }
  if (total == 0) return {};

  // arcs_at[e][p][side]: the arc meeting crossing (e, p) from
  // faces_of_edge(e)[side].
  std::array<std::vector<std::array<int, 2>>, 6> arcs_at;
  for (int e = 0; e < 6; ++e) arcs_at[e].assign(w[e], {-1, -1});

  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 3; ++i) {
      int v = kFaceVerts[f][i];
      for (int e : corner_edges(f, v)) {
        auto fs = faces_of_edge(e);
        int side = (fs[0] == f) ? 0 : 1;
        assert(fs[side] == f);
        for (int depth = 1; depth <= n.arcs[f][i]; ++depth) {
          int p = arc_endpoint_position(v, e, depth, w);
          assert(p >= 0 && p < w[e]);
          assert(arcs_at[e][p][side] < 0);
          arcs_at[e][p][side] = offset[f][i] + depth - 1;
        }
      }
    }

  Dsu dsu(total);
  for (int e = 0; e < 6; ++e)
    for (int p = 0; p < w[e]; ++p) {
      assert(arcs_at[e][p][0] >= 0 && arcs_at[e][p][1] >= 0);
      dsu.unite(arcs_at[e][p][0], arcs_at[e][p][1]);
    }

  std::map<int, TracedLoop> by_root;
  for (int arc = 0; arc < total; ++arc) {
    by_root[dsu.find(arc)].length += 1;
  }
  for (int e = 0; e < 6; ++e)
    for (int p = 0; p < w[e]; ++p)
      by_root[dsu.find(arcs_at[e][p][0])].weights[e] += 1;

  std::vector<TracedLoop> out;
  for (auto& [root, loop] : by_root) out.push_back(loop);
  std::sort(out.begin(), out.end(), [](const TracedLoop& a,
                                       const TracedLoop& b) {
    return a.weights < b.weights;
  });
  return out;
}

bool is_connected_curve(const std::array<int, 6>& w) {
  if (!weights_admissible(w)) return false;
  return trace_components(w).size() == 1;
}

TracedSystem trace_system(const std::array<int, 6>& w) {
  ArcCounts n = arc_counts(w);
  TracedSystem ts;

  // Arc ids in (face, corner slot, depth) order.
  int index_of[4][3];
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 3; ++i) {
      index_of[f][i] = static_cast<int>(ts.arcs.size());
      for (int depth = 1; depth <= n.arcs[f][i]; ++depth)
        ts.arcs.push_back({f, kFaceVerts[f][i], depth});
    }
  const int total = static_cast<int>(ts.arcs.size());

  std::array<std::vector<std::array<int, 2>>, 6> arcs_at;
  for (int e = 0; e < 6; ++e) {
    arcs_at[e].assign(w[e], {-1, -1});
    ts.crossing_loop[e].assign(w[e], -1);
  }
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 3; ++i) {
      int v = kFaceVerts[f][i];
      for (int e : corner_edges(f, v)) {
        auto fs = faces_of_edge(e);
        int side = (fs[0] == f) ? 0 : 1;
        for (int depth = 1; depth <= n.arcs[f][i]; ++depth) {
          int p = arc_endpoint_position(v, e, depth, w);
          arcs_at[e][p][side] = index_of[f][i] + depth - 1;
        }
      }
    }

  auto endpoints = [&](int arc) {
    const TracedArc& a = ts.arcs[arc];
    auto ce = corner_edges(a.face, a.vertex);
    return std::array<std::pair<int, int>, 2>{
        std::pair{ce[0], arc_endpoint_position(a.vertex, ce[0], a.depth, w)},
        std::pair{ce[1], arc_endpoint_position(a.vertex, ce[1], a.depth, w)}};
  };
  auto partner = [&](int arc, int e, int p) {
    auto pair = arcs_at[e][p];
    assert(pair[0] == arc || pair[1] == arc);
    return (pair[0] == arc) ? pair[1] : pair[0];
  };

  std::vector<bool> visited(total, false);
  for (int a0 = 0; a0 < total; ++a0) {
    if (visited[a0]) continue;
    int loop_id = static_cast<int>(ts.loops.size());
    std::vector<LoopStep> steps;
    std::array<int, 6> lw{};

    auto [start, other0] = endpoints(a0);
    int arc = a0;
    auto entry = start;  // crossing the walk stands on before taking arc
    do {
      assert(!visited[arc] || arc == a0);
      visited[arc] = true;
      steps.push_back({entry.first, entry.second, arc});
      ts.crossing_loop[entry.first][entry.second] = loop_id;
      lw[entry.first] += 1;
      auto ends = endpoints(arc);
      auto exit = (ends[0] == entry) ? ends[1] : ends[0];
      arc = partner(arc, exit.first, exit.second);
      entry = exit;
    } while (!(arc == a0 && entry == start));

    ts.loops.push_back(std::move(steps));
    ts.loop_weights.push_back(lw);
  }
  return ts;
}

std::vector<std::array<int, 6>> connected_curve_types(int max_len) {
  std::vector<std::array<int, 6>> out;
  std::array<int, 6> w{};
  auto rec = [&](auto&& self, int e, int budget) -> void {
    if (e == 6) {
      if (is_connected_curve(w)) out.push_back(w);
      return;
    }
    for (int x = 0; x <= budget; ++x) {
      w[e] = x;
      self(self, e + 1, budget - x);
    }
    w[e] = 0;
  };
  rec(rec, 0, max_len);
  return out;
}

namespace {

using Word = std::vector<unsigned char>;  // 0 = first system, 1 = second

Word edge_word(const Word& wx, const Word& wy) {
  Word out = wx;
  out.insert(out.end(), wy.rbegin(), wy.rend());
  return out;
}

int zeros(const Word& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), 0));
}

// Splits an edge word back into the two corner words of the far face:
// prefix of length nx, reversed suffix.  Returns false when the zero counts
// do not match the far face's arc counts.
bool split_edge_word(const Word& ew, int nx, int zeros_x, Word& wx, Word& wy) {
  assert(nx <= static_cast<int>(ew.size()));
  wx.assign(ew.begin(), ew.begin() + nx);
  if (zeros(wx) != zeros_x) return false;
  wy.assign(ew.rbegin(), ew.rend() - nx);
  return true;
}

}  // namespace

bool disjointly_realizable(const std::array<int, 6>& a,
                           const std::array<int, 6>& b) {
  ArcCounts na = arc_counts(a);
  ArcCounts nb = arc_counts(b);

  int n[4][4];   // combined arc count at (face, vertex)
  int za[4][4];  // arcs of the first system at (face, vertex)
  for (int f = 0; f < 4; ++f)
    for (int v : kFaceVerts[f]) {
      za[f][v] = na.at(f, v);
      n[f][v] = na.at(f, v) + nb.at(f, v);
    }

  auto first_word = [&](int f, int v) {
    Word w(n[f][v], 1);
    std::fill(w.begin(), w.begin() + za[f][v], 0);
    return w;  // lexicographically least arrangement
  };

  // Corner words W[f][v]: labels of the arcs at (f, v), innermost first.
  Word w01 = first_word(0, 1);
  do {
    Word w02 = first_word(0, 2);
    do {
      // Edge {1,2} seen from face 0 equals W(3,1) ++ rev(W(3,2)).
      Word w31, w32;
      if (!split_edge_word(edge_word(w01, w02), n[3][1], za[3][1], w31, w32))
        continue;
      Word w03 = first_word(0, 3);
      do {
        // Edge {2,3}: faces 0 and 1.
        Word w12, w13;
        if (!split_edge_word(edge_word(w02, w03), n[1][2], za[1][2], w12,
                             w13))
          continue;
        // Edge {1,3}: faces 0 and 2.
        Word w21, w23;
        if (!split_edge_word(edge_word(w01, w03), n[2][1], za[2][1], w21,
                             w23))
          continue;
        Word w10 = first_word(1, 0);
        do {
          // Edge {0,3}: faces 1 and 2 give W(2,0) ++ rev(W(2,3)).
          Word ew = edge_word(w10, w13);
          Word w20(ew.begin(), ew.begin() + n[2][0]);
          if (zeros(w20) != za[2][0]) continue;
          if (!std::equal(ew.begin() + n[2][0], ew.end(), w23.rbegin()))
            continue;
          // Edge {0,2}: faces 1 and 3 give W(3,0) ++ rev(W(3,2)).
          Word ew2 = edge_word(w10, w12);
          Word w30(ew2.begin(), ew2.begin() + n[3][0]);
          if (zeros(w30) != za[3][0]) continue;
          if (!std::equal(ew2.begin() + n[3][0], ew2.end(), w32.rbegin()))
            continue;
          // Edge {0,1}: faces 2 and 3 must agree.
          if (edge_word(w20, w21) == edge_word(w30, w31)) return true;
        } while (std::next_permutation(w10.begin(), w10.end()));
      } while (std::next_permutation(w03.begin(), w03.end()));
    } while (std::next_permutation(w02.begin(), w02.end()));
  } while (std::next_permutation(w01.begin(), w01.end()));
  return false;
}

namespace {

std::vector<std::array<int, 6>> sorted_loop_weights(
    const std::array<int, 6>& w) {
  std::vector<std::array<int, 6>> out;
  for (const TracedLoop& loop : trace_components(w)) out.push_back(loop.weights);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool disjointly_realizable_by_trace(const std::array<int, 6>& a,
                                    const std::array<int, 6>& b) {
  std::array<int, 6> sum;
  for (int e = 0; e < 6; ++e) sum[e] = a[e] + b[e];

  auto expect = sorted_loop_weights(a);
  auto from_b = sorted_loop_weights(b);
  expect.insert(expect.end(), from_b.begin(), from_b.end());
  std::sort(expect.begin(), expect.end());

  return sorted_loop_weights(sum) == expect;
}

bool family_disjointly_realizable(
    const std::vector<std::array<int, 6>>& curves) {
  std::vector<std::array<int, 6>> distinct = curves;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  for (size_t i = 0; i < distinct.size(); ++i)
    for (size_t j = i + 1; j < distinct.size(); ++j)
      if (!disjointly_realizable(distinct[i], distinct[j])) return false;
  return true;
}

}  // namespace twonormal
