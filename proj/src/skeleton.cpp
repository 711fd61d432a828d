#include "twonormal/skeleton.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace twonormal {

namespace {

// Walk state around an edge: the edge {x, y} of tetrahedron tet, carrying the
// class orientation x -> y, about to leave through face exit.
struct WalkState {
  int tet;
  int x, y;
  int exit;
};

// Crosses the gluing on state.exit.  Returns false at a boundary face.
bool step(const Triangulation& tri, WalkState& s) {
  const auto& g = tri.gluing(s.tet, s.exit);
  if (!g) return false;
  int entered = (g->perm)(s.exit);
  int x2 = (g->perm)(s.x);
  int y2 = (g->perm)(s.y);
  auto fs = faces_of_edge(edge_index(x2, y2));
  s.tet = g->tet;
  s.x = x2;
  s.y = y2;
  s.exit = (fs[0] == entered) ? fs[1] : fs[0];
  return true;
}

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

Skeleton compute_skeleton(const Triangulation& tri) {
  tri.validate();
  const int n = tri.tet_count();

  Skeleton sk;
  sk.tet_count = n;
  sk.edge_class_of.assign(n, {-1, -1, -1, -1, -1, -1});
  sk.edge_sign_of.assign(n, {0, 0, 0, 0, 0, 0});
  sk.edge_pos_of.assign(n, {-1, -1, -1, -1, -1, -1});
  sk.vertex_class_of.assign(n, {-1, -1, -1, -1});
  sk.face_class_of.assign(n, {-1, -1, -1, -1});

  // Edge classes, one oriented walk per class.
  for (int t0 = 0; t0 < n; ++t0) {
    for (int e0 = 0; e0 < 6; ++e0) {
      if (sk.edge_class_of[t0][e0] >= 0) continue;
      const int a = kEdgeVerts[e0][0];
      const int b = kEdgeVerts[e0][1];
      const auto seed_faces = faces_of_edge(e0);

      std::vector<WalkState> path;
      WalkState s{t0, a, b, seed_faces[0]};
      path.push_back(s);
      bool closed = false;
      while (true) {
        WalkState next = s;
        if (!step(tri, next)) break;
        if (next.tet == t0 && edge_index(next.x, next.y) == e0) {
          if (next.x != a)
            throw std::invalid_argument(
                "edge identified with itself in reverse");
          assert(next.y == b && next.exit == seed_faces[0]);
          closed = true;
          break;
        }
        path.push_back(next);
        s = next;
      }
      if (!closed) {
        // Boundary edge: walk the other way and prepend.
        std::vector<WalkState> back;
        WalkState r{t0, a, b, seed_faces[1]};
        while (step(tri, r)) {
          assert(!(r.tet == t0 && edge_index(r.x, r.y) == e0));
          back.push_back(r);
        }
        path.insert(path.begin(), back.rbegin(), back.rend());
      }

      const int id = static_cast<int>(sk.edges.size());
      EdgeClass cls;
      cls.cyclic = closed;
      for (const WalkState& st : path) {
        int e = edge_index(st.x, st.y);
        if (sk.edge_class_of[st.tet][e] >= 0)
          throw std::invalid_argument(
              "edge identified with itself in reverse");
        int sign = (st.x < st.y) ? 1 : -1;
        sk.edge_class_of[st.tet][e] = id;
        sk.edge_sign_of[st.tet][e] = sign;
        sk.edge_pos_of[st.tet][e] = static_cast<int>(cls.embeddings.size());
        cls.embeddings.push_back({st.tet, e, sign});
      }
      sk.edges.push_back(std::move(cls));
    }
  }

  // Vertex classes via identifications induced by the gluings.
  Dsu dsu(4 * n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      for (int v : kFaceVerts[f])
        dsu.unite(4 * t + v, 4 * g->tet + (g->perm)(v));
    }
  std::vector<int> root_to_class(4 * n, -1);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) {
      int root = dsu.find(4 * t + v);
      if (root_to_class[root] < 0) {
        root_to_class[root] = static_cast<int>(sk.vertices.size());
        sk.vertices.emplace_back();
      }
      int id = root_to_class[root];
      sk.vertex_class_of[t][v] = id;
      sk.vertices[id].corners.emplace_back(t, v);
    }

  // Face classes: glued pairs keep the lexicographically smaller side as
  // canonical, boundary faces stand alone.
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      if (sk.face_class_of[t][f] >= 0) continue;
      int id = static_cast<int>(sk.faces.size());
      FaceClass fc;
      fc.tet0 = t;
      fc.face0 = f;
      const auto& g = tri.gluing(t, f);
      if (g) {
        fc.tet1 = g->tet;
        fc.face1 = (g->perm)(f);
        fc.to_other = g->perm;
        sk.face_class_of[fc.tet1][fc.face1] = id;
      }
      sk.face_class_of[t][f] = id;
      sk.faces.push_back(fc);
    }

  return sk;
}

}  // namespace twonormal
