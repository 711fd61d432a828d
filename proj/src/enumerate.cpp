#include "twonormal/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <stdexcept>
#include <thread>

#include "twonormal/dd.hpp"
#include "twonormal/matching.hpp"
#include "twonormal/pieces.hpp"

namespace twonormal {

const char* mode_name(SurfaceMode mode) {
  switch (mode) {
    case SurfaceMode::Normal: return "normal";
    case SurfaceMode::AlmostNormal: return "almost";
    case SurfaceMode::TwoNormal: return "2normal";
  }
  return "?";
}

std::optional<SurfaceMode> parse_mode(const std::string& name) {
  if (name == "normal") return SurfaceMode::Normal;
  if (name == "almost") return SurfaceMode::AlmostNormal;
  if (name == "2normal") return SurfaceMode::TwoNormal;
  return std::nullopt;
}

namespace {

int col_of(int tet, int slot) { return kPieceTypesPerTet * tet + slot; }

struct Content {
  int octagons = 0;
  int dodecagons = 0;
  int tubes = 0;
};

// Clamped so oversized coordinates still compare sanely; anything above
// one fails buildability anyway.
int clamp_count(const BigInt& v) {
  return v > 4 ? 4 : static_cast<int>(v);
}

Content content_of(const std::vector<BigInt>& coords,
                   const std::vector<TubeDecoration>& tubes, int tets) {
  Content c;
  for (int t = 0; t < tets; ++t) {
    for (int k = 0; k < 3; ++k)
      c.octagons += clamp_count(coords[col_of(t, 7 + k)]);
    for (int j = 0; j < 6; ++j)
      c.dodecagons += clamp_count(coords[col_of(t, 10 + j)]);
  }
  c.tubes = static_cast<int>(tubes.size());
  return c;
}

}  // namespace

Admissibility is_admissible(const Triangulation& tri, const Skeleton& sk,
                            const std::vector<BigInt>& coords,
                            const std::vector<TubeDecoration>& tubes,
                            const EnumerationOptions& opts) {
  if (auto v = buildable_violation(tri, sk, coords, tubes,
                                   opts.allow_nested_tubes))
    return {false, *v};
  for (int t = 0; t < tri.tet_count(); ++t) {
    int in_tet = 0;
    for (int k = 0; k < 3; ++k)
      if (coords[col_of(t, 7 + k)] > 0) ++in_tet;
    if (in_tet > 1) return {false, "octagons-same-tetrahedron"};
  }
  Content c = content_of(coords, tubes, tri.tet_count());
  int features = 2 * c.dodecagons + c.octagons + c.tubes;
  int want = 0;
  switch (opts.mode) {
    case SurfaceMode::Normal: want = 0; break;
    case SurfaceMode::AlmostNormal: want = 1; break;
    case SurfaceMode::TwoNormal: want = 2; break;
  }
  if (features != want) return {false, "pattern-mismatch"};
  return {true, {}};
}

namespace {

using Ray = std::vector<BigInt>;

struct Cone {
  std::vector<int> active;
  std::vector<int> required;  // exceptional columns pinned to one
};

// Extends base by every way of allowing at most one quad family in each
// tetrahedron of free_tets.
void add_quad_choices(std::vector<Cone>& cones, const Cone& base,
                      const std::vector<int>& free_tets, size_t i) {
  if (i == free_tets.size()) {
    cones.push_back(base);
    return;
  }
  add_quad_choices(cones, base, free_tets, i + 1);
  for (int k = 0; k < 3; ++k) {
    Cone next = base;
    next.active.push_back(col_of(free_tets[i], 4 + k));
    add_quad_choices(cones, next, free_tets, i + 1);
  }
}

std::vector<Cone> build_cones(int tets, SurfaceMode mode) {
  std::vector<Cone> cones;
  Cone base;
  for (int t = 0; t < tets; ++t)
    for (int s = 0; s < 4; ++s) base.active.push_back(col_of(t, s));

  auto tets_without = [&](std::initializer_list<int> skip) {
    std::vector<int> free;
    for (int t = 0; t < tets; ++t)
      if (std::find(skip.begin(), skip.end(), t) == skip.end())
        free.push_back(t);
    return free;
  };

  // Normal cones seed every mode: tube decorations ride on their rays.
  add_quad_choices(cones, base, tets_without({}), 0);

  if (mode == SurfaceMode::AlmostNormal || mode == SurfaceMode::TwoNormal) {
    for (int t = 0; t < tets; ++t)
      for (int p = 0; p < 3; ++p) {
        Cone c = base;
        c.active.push_back(col_of(t, 7 + p));
        c.required = {col_of(t, 7 + p)};
        add_quad_choices(cones, c, tets_without({t}), 0);
      }
  }

  if (mode == SurfaceMode::TwoNormal) {
    for (int t1 = 0; t1 < tets; ++t1)
      for (int t2 = t1 + 1; t2 < tets; ++t2)
        for (int p1 = 0; p1 < 3; ++p1)
          for (int p2 = 0; p2 < 3; ++p2) {
            Cone c = base;
            c.active.push_back(col_of(t1, 7 + p1));
            c.active.push_back(col_of(t2, 7 + p2));
            c.required = {col_of(t1, 7 + p1), col_of(t2, 7 + p2)};
            add_quad_choices(cones, c, tets_without({t1, t2}), 0);
          }
    for (int t = 0; t < tets; ++t)
      for (int j = 0; j < 6; ++j) {
        Cone c = base;
        c.active.push_back(col_of(t, 10 + j));
        c.required = {col_of(t, 10 + j)};
        add_quad_choices(cones, c, tets_without({t}), 0);
      }
  }

  return cones;
}

std::array<int, 6> weights_of(const std::vector<BigInt>& coords, int tet) {
  std::array<int, 6> w{};
  for (int s = 0; s < kPieceTypesPerTet; ++s) {
    long long c = static_cast<long long>(coords[col_of(tet, s)]);
    if (c == 0) continue;
    auto pw = piece_from_coordinate(s).weights();
    for (int e = 0; e < 6; ++e) w[e] += static_cast<int>(c) * pw[e];
  }
  return w;
}

// Tube positions that keep the surface buildable on their own.
std::vector<TubeDecoration> single_tube_positions(
    const Triangulation& tri, const Skeleton& sk,
    const std::vector<BigInt>& coords, bool allow_nested_tubes) {
  std::vector<TubeDecoration> out;
  if (buildable_violation(tri, sk, coords, {}, allow_nested_tubes))
    return out;
  for (int t = 0; t < tri.tet_count(); ++t) {
    std::array<int, 6> w = weights_of(coords, t);
    for (int e = 0; e < 6; ++e)
      for (int slot = 0; slot + 1 < w[e]; ++slot) {
        TubeDecoration tube{t, e, slot};
        if (!buildable_violation(tri, sk, coords, {tube}, allow_nested_tubes))
          out.push_back(tube);
      }
  }
  return out;
}

}  // namespace

std::vector<CensusEntry> enumerate_census(const Triangulation& tri,
                                          const EnumerationOptions& opts) {
  tri.validate();
  if (tri.tet_count() > opts.max_tets)
    throw std::invalid_argument("triangulation exceeds the tetrahedron cap");

  const Skeleton sk = compute_skeleton(tri);
  const MatchingSystem ms = build_matching_system(tri, sk);
  const std::vector<std::vector<int>> rows = ms.coefficient_rows();
  const std::vector<Cone> cones = build_cones(tri.tet_count(), opts.mode);

  // Rays per cone, workers pulling cone indices; results keep cone order.
  std::vector<std::vector<Ray>> per_cone(cones.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cones.size()) break;
      std::vector<Ray> rays = extreme_rays(rows, ms.cols, cones[i].active);
      std::vector<Ray> kept;
      for (Ray& r : rays) {
        bool good = true;
        for (int col : cones[i].required)
          if (r[col] != 1) good = false;
        if (good) kept.push_back(std::move(r));
      }
      per_cone[i] = std::move(kept);
    }
  };
  int nthreads = std::max(1, opts.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::vector<Ray> rays;
  for (std::vector<Ray>& part : per_cone)
    for (Ray& r : part) rays.push_back(std::move(r));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  // Split by content: tube decorations only ride on the right base rays.
  std::vector<Ray> plain, one_oct, ready;  // ready = full pattern already
  for (Ray& r : rays) {
    Content c = content_of(r, {}, tri.tet_count());
    int features = 2 * c.dodecagons + c.octagons;
    switch (opts.mode) {
      case SurfaceMode::Normal:
        if (features == 0) ready.push_back(std::move(r));
        break;
      case SurfaceMode::AlmostNormal:
        if (features == 0) plain.push_back(std::move(r));
        else if (features == 1) ready.push_back(std::move(r));
        break;
      case SurfaceMode::TwoNormal:
        if (features == 0) plain.push_back(std::move(r));
        else if (features == 1 && c.octagons == 1)
          one_oct.push_back(std::move(r));
        else if (features == 2) ready.push_back(std::move(r));
        break;
    }
  }

  using Candidate = std::pair<Ray, std::vector<TubeDecoration>>;
  std::vector<Candidate> candidates;
  for (Ray& r : ready) candidates.push_back({std::move(r), {}});

  if (opts.mode == SurfaceMode::AlmostNormal) {
    for (const Ray& r : plain)
      for (const TubeDecoration& tube :
           single_tube_positions(tri, sk, r, opts.allow_nested_tubes))
        candidates.push_back({r, {tube}});
  }
  if (opts.mode == SurfaceMode::TwoNormal) {
    for (const Ray& r : one_oct)
      for (const TubeDecoration& tube :
           single_tube_positions(tri, sk, r, opts.allow_nested_tubes))
        candidates.push_back({r, {tube}});
    for (const Ray& r : plain) {
      std::vector<TubeDecoration> spots =
          single_tube_positions(tri, sk, r, opts.allow_nested_tubes);
      for (size_t i = 0; i < spots.size(); ++i) {
        size_t j0 = opts.allow_nested_tubes ? i : i + 1;
        for (size_t j = j0; j < spots.size(); ++j) {
          std::vector<TubeDecoration> pair{spots[i], spots[j]};
          if (!buildable_violation(tri, sk, r, pair,
                                   opts.allow_nested_tubes))
            candidates.push_back({r, std::move(pair)});
        }
      }
    }
  }

  std::vector<CensusEntry> out;
  for (Candidate& cand : candidates) {
    Admissibility adm = is_admissible(tri, sk, cand.first, cand.second, opts);
    if (!adm.ok) continue;
    BuiltSurface surface = reconstruct(tri, sk, cand.first, cand.second,
                                       opts.allow_nested_tubes);
    if (opts.require_closed && !surface.closed) continue;
    out.push_back({std::move(cand.first), std::move(cand.second),
                   std::move(surface)});
  }

  std::sort(out.begin(), out.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              if (a.coords != b.coords) return a.coords < b.coords;
              return a.tubes < b.tubes;
            });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CensusEntry& a, const CensusEntry& b) {
                          return a.coords == b.coords && a.tubes == b.tubes;
                        }),
            out.end());
  return out;
}

}  // namespace twonormal
