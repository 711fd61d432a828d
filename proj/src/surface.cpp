#include "twonormal/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "twonormal/curves.hpp"
#include "twonormal/pieces.hpp"

namespace twonormal {

std::string classify_content(int octagons, int tubes, int dodecagons) {
  if (dodecagons == 0) {
    if (octagons == 0 && tubes == 0) return "normal";
    if (octagons == 1 && tubes == 0) return "almost-normal-octagon";
    if (octagons == 0 && tubes == 1) return "almost-normal-tube";
    if (octagons == 2 && tubes == 0) return "two-octagons";
    if (octagons == 0 && tubes == 2) return "two-tubes";
    if (octagons == 1 && tubes == 1) return "octagon-tube";
  } else if (dodecagons == 1 && octagons == 0 && tubes == 0) {
    return "dodecagon";
  }
  return "nonstandard";
}

namespace {

constexpr long long kCountLimit = 1 << 20;

using TetCounts = std::array<long long, kPieceTypesPerTet>;

std::optional<std::string> extract_counts(const Triangulation& tri,
                                          const std::vector<BigInt>& coords,
                                          std::vector<TetCounts>& out) {
  const int n = tri.tet_count();
  if (static_cast<int>(coords.size()) != kPieceTypesPerTet * n)
    return "dimension-mismatch";
  out.assign(n, TetCounts{});
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < kPieceTypesPerTet; ++s) {
      const BigInt& c = coords[kPieceTypesPerTet * t + s];
      if (c < 0) return "negative-coordinate";
      if (c > kCountLimit) return "coordinate-overflow";
      out[t][s] = static_cast<long long>(c);
    }
  return std::nullopt;
}

std::array<int, 6> tet_weights(const TetCounts& counts) {
  std::array<int, 6> w{};
  for (int s = 0; s < kPieceTypesPerTet; ++s) {
    if (counts[s] == 0) continue;
    auto pw = piece_from_coordinate(s).weights();
    for (int e = 0; e < 6; ++e)
      w[e] += static_cast<int>(counts[s]) * pw[e];
  }
  return w;
}

bool short_boundary(int len) { return len == 3 || len == 4; }

std::optional<std::string> buildable_core(
    const Triangulation& tri, const std::vector<TetCounts>& counts,
    const std::vector<TubeDecoration>& tubes, bool allow_nested_tubes) {
  const int n = tri.tet_count();

  // One quad family per tetrahedron.
  for (int t = 0; t < n; ++t) {
    int quad_families = 0;
    for (int k = 0; k < 3; ++k)
      if (counts[t][4 + k] > 0) ++quad_families;
    if (quad_families > 1) return "quad-condition";
  }

  // Pairwise compatibility and the long-boundary bound per tetrahedron.
  for (int t = 0; t < n; ++t) {
    std::vector<int> present;
    for (int s = 0; s < kPieceTypesPerTet; ++s)
      if (counts[t][s] > 0) present.push_back(s);
    for (size_t i = 0; i < present.size(); ++i)
      for (size_t j = i + 1; j < present.size(); ++j)
        if (!pieces_compatible(piece_from_coordinate(present[i]),
                               piece_from_coordinate(present[j])))
          return "incompatible-pieces";
    long long long_loops = 0;
    for (int s : present)
      if (piece_from_coordinate(s).boundary_length() >= 8)
        long_loops += counts[t][s];
    if (long_loops > 1) return "multiple-long-boundaries";
  }

  // Exceptional pieces never come in parallel copies.
  for (int t = 0; t < n; ++t)
    for (int s = 7; s < kPieceTypesPerTet; ++s)
      if (counts[t][s] > 1) return "exceptional-multiplicity";

  if (tubes.empty()) return std::nullopt;

  // Tube rules need the forced per-tet arrangements.
  std::map<int, std::array<int, 6>> weights;
  std::map<int, TracedSystem> traces;
  auto trace_of = [&](int t) -> TracedSystem& {
    auto it = traces.find(t);
    if (it == traces.end()) {
      weights[t] = tet_weights(counts[t]);
      it = traces.emplace(t, trace_system(weights[t])).first;
    }
    return it->second;
  };

  for (const TubeDecoration& tube : tubes) {
    if (tube.tet < 0 || tube.tet >= n || tube.edge < 0 || tube.edge >= 6)
      return "tube-slot-range";
    int w = tet_weights(counts[tube.tet])[tube.edge];
    if (tube.slot < 0 || tube.slot + 1 >= w) return "tube-slot-range";
  }

  if (!allow_nested_tubes) {
    std::vector<TubeDecoration> sorted = tubes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return "nested-tubes";
  }

  struct TubeHosts {
    int tet;
    int lo, hi;  // loop ids within the tet's arrangement
  };
  std::vector<TubeHosts> hosts;
  for (const TubeDecoration& tube : tubes) {
    TracedSystem& ts = trace_of(tube.tet);
    int lo = ts.crossing_loop[tube.edge][tube.slot];
    int hi = ts.crossing_loop[tube.edge][tube.slot + 1];
    int len_lo = curve_length(ts.loop_weights[lo]);
    int len_hi = curve_length(ts.loop_weights[hi]);
    if (lo == hi) {
      if (len_lo != 8) return "tube-self-boundary-length";
    } else {
      if (len_lo > 8 || len_hi > 8) return "tube-attachment-length";
    }
    hosts.push_back({tube.tet, lo, hi});
  }

  // Two tubes sharing a piece form a pair of pants; every piece involved
  // must then carry a triangle or quad boundary.
  for (size_t i = 0; i < hosts.size(); ++i)
    for (size_t j = i + 1; j < hosts.size(); ++j) {
      if (hosts[i].tet != hosts[j].tet) continue;
      std::set<int> a{hosts[i].lo, hosts[i].hi};
      std::set<int> b{hosts[j].lo, hosts[j].hi};
      bool share = false;
      for (int l : a)
        if (b.count(l)) share = true;
      if (!share) continue;
      TracedSystem& ts = trace_of(hosts[i].tet);
      a.insert(b.begin(), b.end());
      for (int l : a)
        if (!short_boundary(curve_length(ts.loop_weights[l])))
          return "tube-pants-boundary-length";
    }

  return std::nullopt;
}

}  // namespace

std::optional<std::string> buildable_violation(
    const Triangulation& tri, const Skeleton&,
    const std::vector<BigInt>& coords,
    const std::vector<TubeDecoration>& tubes, bool allow_nested_tubes) {
  std::vector<TetCounts> counts;
  if (auto v = extract_counts(tri, coords, counts)) return v;
  return buildable_core(tri, counts, tubes, allow_nested_tubes);
}

namespace {

struct Step {
  int vertex = -1;   // complex vertex the step stands on
  int edge = -1;     // complex edge traversed next
  bool forward = true;
  int loc_edge = -1;  // tet-local crossing identity, -1 on tube cells
  int loc_pos = -1;
};

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

int image_edge(const Permutation4& p, int e) {
  return edge_index(p(kEdgeVerts[e][0]), p(kEdgeVerts[e][1]));
}

}  // namespace

BuiltSurface reconstruct(const Triangulation& tri, const Skeleton& sk,
                         const std::vector<BigInt>& coords,
                         const std::vector<TubeDecoration>& tubes_in,
                         bool allow_nested_tubes) {
  const int n = tri.tet_count();
  std::vector<TetCounts> counts;
  if (auto v = extract_counts(tri, coords, counts))
    throw std::invalid_argument("not buildable: " + *v);
  if (auto v = buildable_core(tri, counts, tubes_in, allow_nested_tubes))
    throw std::invalid_argument("not buildable: " + *v);

  std::vector<TubeDecoration> tubes = tubes_in;
  std::sort(tubes.begin(), tubes.end());

  // Forced arrangement per tetrahedron; every traced loop is one piece.
  std::vector<std::array<int, 6>> weights(n);
  std::vector<TracedSystem> ts(n);
  std::vector<ArcCounts> ac(n);
  std::vector<std::vector<PieceType>> loop_piece(n);
  long long piece_total = 0;
  for (int t = 0; t < n; ++t) {
    weights[t] = tet_weights(counts[t]);
    ts[t] = trace_system(weights[t]);
    ac[t] = arc_counts(weights[t]);
    TetCounts seen{};
    for (const auto& lw : ts[t].loop_weights) {
      auto pt = piece_from_weights(lw);
      if (!pt)
        throw std::logic_error(
            "forced arrangement produced a non-catalogued loop");
      loop_piece[t].push_back(*pt);
      seen[pt->coordinate()] += 1;
    }
    if (seen != counts[t])
      throw std::logic_error(
          "forced arrangement disagrees with the piece counts");
    piece_total += static_cast<long long>(ts[t].loops.size());
  }

  // Matching: glued faces must see equal arc counts at matched corners.
  for (const FaceClass& f : sk.faces) {
    if (f.boundary()) continue;
    for (int v : kFaceVerts[f.face0])
      if (ac[f.tet0].at(f.face0, v) != ac[f.tet1].at(f.face1, (f.to_other)(v)))
        throw std::invalid_argument(
            "coordinates violate the matching equations");
  }

  // Edge classes must see one weight all around.
  const int num_classes = static_cast<int>(sk.edges.size());
  std::vector<int> class_weight(num_classes, 0);
  for (int c = 0; c < num_classes; ++c) {
    const EdgeClass& cls = sk.edges[c];
    assert(!cls.embeddings.empty());
    class_weight[c] = weights[cls.embeddings[0].tet][cls.embeddings[0].edge];
    for (const EdgeEmbedding& em : cls.embeddings)
      if (weights[em.tet][em.edge] != class_weight[c])
        throw std::invalid_argument(
            "edge weights disagree around an edge class");
  }

  // Complex vertices: one per crossing of an edge class.
  std::vector<int> vbase(num_classes, 0);
  int num_vertices = 0;
  for (int c = 0; c < num_classes; ++c) {
    vbase[c] = num_vertices;
    num_vertices += class_weight[c];
  }
  auto vertex_id = [&](int t, int e, int p) {
    int c = sk.edge_class_of[t][e];
    int g = (sk.edge_sign_of[t][e] > 0) ? p : class_weight[c] - 1 - p;
    assert(g >= 0 && g < class_weight[c]);
    return vbase[c] + g;
  };

  // Complex edges: one per arc slot of a face class, canonical side leading.
  struct CEdge {
    int vstart = -1;
    int vend = -1;
    std::array<int, 2> start_local;  // local corner edge per side, -1 unused
  };
  std::vector<CEdge> cedges;
  const int num_fclasses = static_cast<int>(sk.faces.size());
  std::vector<std::array<int, 4>> cbase(num_fclasses);  // by corner vertex
  std::vector<Permutation4> from_other(num_fclasses);
  long long arc_total = 0;
  for (int fc = 0; fc < num_fclasses; ++fc) {
    const FaceClass& f = sk.faces[fc];
    from_other[fc] = f.to_other.inverse();
    cbase[fc] = {-1, -1, -1, -1};
    for (int v : kFaceVerts[f.face0]) {
      cbase[fc][v] = static_cast<int>(cedges.size());
      int count = ac[f.tet0].at(f.face0, v);
      arc_total += count;
      auto ce = corner_edges(f.face0, v);
      for (int depth = 1; depth <= count; ++depth) {
        CEdge edge;
        int pa = arc_endpoint_position(v, ce[0], depth, weights[f.tet0]);
        int pb = arc_endpoint_position(v, ce[1], depth, weights[f.tet0]);
        edge.vstart = vertex_id(f.tet0, ce[0], pa);
        edge.vend = vertex_id(f.tet0, ce[1], pb);
        edge.start_local = {ce[0], -1};
        if (!f.boundary()) {
          edge.start_local[1] = image_edge(f.to_other, ce[0]);
          // The far side must place the matched arc on the same crossings.
          int v1 = (f.to_other)(v);
          int ea1 = image_edge(f.to_other, ce[0]);
          int eb1 = image_edge(f.to_other, ce[1]);
          int qa = arc_endpoint_position(v1, ea1, depth, weights[f.tet1]);
          int qb = arc_endpoint_position(v1, eb1, depth, weights[f.tet1]);
          if (vertex_id(f.tet1, ea1, qa) != edge.vstart ||
              vertex_id(f.tet1, eb1, qb) != edge.vend)
            throw std::logic_error(
                "glued faces disagree on arc endpoints");
        }
        cedges.push_back(edge);
      }
    }
  }

  // Looks up the complex edge and travel direction for an arc met inside
  // tetrahedron t while standing on local crossing (loc_e, travelling away).
  auto cedge_of = [&](int t, const TracedArc& arc, int from_local_edge,
                      bool& forward) {
    int fc = sk.face_class_of[t][arc.face];
    const FaceClass& f = sk.faces[fc];
    bool canonical = (t == f.tet0 && arc.face == f.face0);
    int corner = canonical ? arc.vertex : from_other[fc](arc.vertex);
    assert(cbase[fc][corner] >= 0);
    int id = cbase[fc][corner] + arc.depth - 1;
    int side = canonical ? 0 : 1;
    int start = cedges[id].start_local[side];
    assert(start >= 0);
    auto ce = corner_edges(arc.face, arc.vertex);
    assert(from_local_edge == ce[0] || from_local_edge == ce[1]);
    assert(start == ce[0] || start == ce[1]);
    (void)ce;
    forward = (from_local_edge == start);
    return id;
  };

  // Piece polygons.
  std::vector<std::vector<Step>> faces;
  std::vector<std::pair<int, int>> face_owner;  // (tet, loop)
  std::map<std::pair<int, int>, int> face_of_loop;
  for (int t = 0; t < n; ++t)
    for (size_t l = 0; l < ts[t].loops.size(); ++l) {
      std::vector<Step> steps;
      for (const LoopStep& ls : ts[t].loops[l]) {
        Step st;
        st.vertex = vertex_id(t, ls.edge, ls.position);
        st.loc_edge = ls.edge;
        st.loc_pos = ls.position;
        bool forward = true;
        st.edge = cedge_of(t, ts[t].arcs[ls.arc], ls.edge, forward);
        st.forward = forward;
        steps.push_back(st);
      }
      face_of_loop[{t, static_cast<int>(l)}] =
          static_cast<int>(faces.size());
      face_owner.emplace_back(t, static_cast<int>(l));
      faces.push_back(std::move(steps));
    }

  // Tubes: four vertices, eight edges and two rectangles each, plus a
  // detour spliced into each host polygon at the attachment crossing.
  struct PendingDetour {
    int face;
    size_t index;   // step index before any splicing
    int order;      // tube number, for a stable splice order
    std::vector<Step> steps;
  };
  std::vector<PendingDetour> pending;
  std::vector<int> tube_rect(tubes.size(), -1);  // first rectangle per tube

  auto new_edge = [&](int vs, int ve) {
    cedges.push_back({vs, ve, {-1, -1}});
    return static_cast<int>(cedges.size()) - 1;
  };

  for (size_t j = 0; j < tubes.size(); ++j) {
    const TubeDecoration& tube = tubes[j];
    int t = tube.tet;
    int lo_loop = ts[t].crossing_loop[tube.edge][tube.slot];
    int hi_loop = ts[t].crossing_loop[tube.edge][tube.slot + 1];
    int face_lo = face_of_loop.at({t, lo_loop});
    int face_hi = face_of_loop.at({t, hi_loop});

    auto find_step = [&](int face, int pos) {
      const auto& steps = faces[face];
      for (size_t i = 0; i < steps.size(); ++i)
        if (steps[i].loc_edge == tube.edge && steps[i].loc_pos == pos)
          return i;
      assert(false && "attachment crossing not on host boundary");
      return size_t{0};
    };
    size_t i_lo = find_step(face_lo, tube.slot);
    size_t i_hi = find_step(face_hi, tube.slot + 1);
    int x_lo = faces[face_lo][i_lo].vertex;
    int x_hi = faces[face_hi][i_hi].vertex;

    int h1 = num_vertices++;
    int h2 = num_vertices++;
    int h1p = num_vertices++;
    int h2p = num_vertices++;
    int c1 = new_edge(h1, h2);
    int c2 = new_edge(h2, h1);
    int c1p = new_edge(h1p, h2p);
    int c2p = new_edge(h2p, h1p);
    int l1 = new_edge(h1, h1p);
    int l2 = new_edge(h2, h2p);
    int r_lo = new_edge(h1, x_lo);
    int r_hi = new_edge(h1p, x_hi);

    pending.push_back(
        {face_lo, i_lo, static_cast<int>(j),
         {{x_lo, r_lo, false, -1, -1},
          {h1, c2, false, -1, -1},
          {h2, c1, false, -1, -1},
          {h1, r_lo, true, -1, -1}}});
    pending.push_back(
        {face_hi, i_hi, static_cast<int>(j),
         {{x_hi, r_hi, false, -1, -1},
          {h1p, c1p, true, -1, -1},
          {h2p, c2p, true, -1, -1},
          {h1p, r_hi, true, -1, -1}}});

    tube_rect[j] = static_cast<int>(faces.size());
    face_owner.emplace_back(-1, static_cast<int>(j));
    faces.push_back({{h1, c1, true, -1, -1},
                     {h2, l2, true, -1, -1},
                     {h2p, c1p, false, -1, -1},
                     {h1p, l1, false, -1, -1}});
    face_owner.emplace_back(-1, static_cast<int>(j));
    faces.push_back({{h2, c2, true, -1, -1},
                     {h1, l1, true, -1, -1},
                     {h1p, c2p, false, -1, -1},
                     {h2p, l2, false, -1, -1}});
  }

  // Splice detours back to front so recorded indices stay valid.
  std::sort(pending.begin(), pending.end(),
            [](const PendingDetour& a, const PendingDetour& b) {
              if (a.face != b.face) return a.face < b.face;
              if (a.index != b.index) return a.index > b.index;
              return a.order > b.order;
            });
  for (const PendingDetour& d : pending)
    faces[d.face].insert(faces[d.face].begin() + d.index, d.steps.begin(),
                         d.steps.end());

  // Euler characteristic, two ways.
  const int num_edges = static_cast<int>(cedges.size());
  const int num_faces = static_cast<int>(faces.size());
  long long chi_cells =
      static_cast<long long>(num_vertices) - num_edges + num_faces;

  long long crossing_total = 0;
  for (int c = 0; c < num_classes; ++c) crossing_total += class_weight[c];
  long long chi_vector = piece_total - arc_total + crossing_total -
                         2 * static_cast<long long>(tubes.size());
  if (chi_cells != chi_vector)
    throw std::logic_error("cell count and coordinate count disagree");

  // Edge incidences drive components, orientability and boundary.
  std::vector<std::vector<std::pair<int, bool>>> uses(num_edges);
  for (int f = 0; f < num_faces; ++f)
    for (const Step& st : faces[f]) uses[st.edge].push_back({f, st.forward});

  Dsu comp(num_faces);
  for (int e = 0; e < num_edges; ++e) {
    const auto& u = uses[e];
    if (u.size() > 2)
      throw std::logic_error("complex edge met more than twice");
    assert(!u.empty());
    if (u.size() == 2) comp.unite(u[0].first, u[1].first);
  }

  std::map<int, int> comp_index;
  for (int f = 0; f < num_faces; ++f) {
    int root = comp.find(f);
    if (!comp_index.count(root)) {
      int idx = static_cast<int>(comp_index.size());
      comp_index[root] = idx;
    }
  }
  const int num_comps = static_cast<int>(comp_index.size());

  std::vector<ComponentInfo> infos(num_comps);
  std::vector<std::set<int>> comp_verts(num_comps), comp_edges(num_comps);
  for (int f = 0; f < num_faces; ++f) {
    int ci = comp_index[comp.find(f)];
    infos[ci].faces += 1;
    for (const Step& st : faces[f]) {
      comp_verts[ci].insert(st.vertex);
      comp_edges[ci].insert(st.edge);
    }
  }
  for (int e = 0; e < num_edges; ++e)
    if (uses[e].size() == 1)
      infos[comp_index[comp.find(uses[e][0].first)]].closed = false;

  // Orientability: neighbouring faces must run shared edges oppositely.
  std::vector<std::vector<std::tuple<int, bool, bool>>> adj(num_faces);
  for (int e = 0; e < num_edges; ++e) {
    const auto& u = uses[e];
    if (u.size() != 2) continue;
    if (u[0].first == u[1].first) {
      if (u[0].second == u[1].second)
        infos[comp_index[comp.find(u[0].first)]].orientable = false;
      continue;
    }
    adj[u[0].first].push_back({u[1].first, u[0].second, u[1].second});
    adj[u[1].first].push_back({u[0].first, u[1].second, u[0].second});
  }
  {
    std::vector<int> spin(num_faces, -1);
    for (int f0 = 0; f0 < num_faces; ++f0) {
      if (spin[f0] >= 0) continue;
      spin[f0] = 0;
      std::vector<int> stack{f0};
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const auto& [g, df, dg] : adj[f]) {
          int want = spin[f] ^ (df == dg ? 1 : 0);
          if (spin[g] < 0) {
            spin[g] = want;
            stack.push_back(g);
          } else if (spin[g] != want) {
            infos[comp_index[comp.find(f)]].orientable = false;
          }
        }
      }
    }
  }

  // Content per component.
  for (int f = 0; f < num_faces; ++f) {
    int ci = comp_index[comp.find(f)];
    auto [t, l] = face_owner[f];
    if (t < 0) continue;  // tube rectangles are counted below
    switch (loop_piece[t][l].kind) {
      case PieceKind::Octagon: infos[ci].octagons += 1; break;
      case PieceKind::Dodecagon: infos[ci].dodecagons += 1; break;
      default: break;
    }
  }
  for (size_t j = 0; j < tubes.size(); ++j)
    infos[comp_index[comp.find(tube_rect[j])]].tubes += 1;

  BuiltSurface out;
  out.vertices = num_vertices;
  out.edges = num_edges;
  out.faces = num_faces;
  out.euler_cells = chi_cells;
  out.euler_vector = chi_vector;
  for (int c = 0; c < num_classes; ++c)
    out.edge_weights.push_back(class_weight[c]);

  long long chi_sum = 0;
  int oct_total = 0, dodec_total = 0;
  for (int ci = 0; ci < num_comps; ++ci) {
    ComponentInfo& info = infos[ci];
    info.vertices = static_cast<int>(comp_verts[ci].size());
    info.edges = static_cast<int>(comp_edges[ci].size());
    info.euler = static_cast<long long>(info.vertices) - info.edges +
                 info.faces;
    info.sphere = info.closed && info.orientable && info.euler == 2;
    info.cls = classify_content(info.octagons, info.tubes, info.dodecagons);
    chi_sum += info.euler;
    oct_total += info.octagons;
    dodec_total += info.dodecagons;
    if (!info.closed) out.closed = false;
  }
  assert(chi_sum == chi_cells);
  (void)chi_sum;
  out.components = std::move(infos);
  out.cls = classify_content(oct_total, static_cast<int>(tubes.size()),
                             dodec_total);
  return out;
}

}  // namespace twonormal
