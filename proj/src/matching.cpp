#include "twonormal/matching.hpp"

#include <cassert>

namespace twonormal {

MatchingSystem build_matching_system(const Triangulation& tri,
                                     const Skeleton& sk) {
  const int n = tri.tet_count();
  MatchingSystem sys;
  sys.cols = kPieceTypesPerTet * n;

  std::vector<ArcCounts> piece_arcs;
  for (const PieceType& pt : piece_catalog())
    piece_arcs.push_back(arc_counts(pt.weights()));

  for (int t = 0; t < n; ++t)
    for (const PieceType& pt : piece_catalog())
      sys.col_labels.push_back(pt.label(t));

  for (int fc = 0; fc < static_cast<int>(sk.faces.size()); ++fc) {
    const FaceClass& f = sk.faces[fc];
    if (f.boundary()) continue;
    for (int v : kFaceVerts[f.face0]) {
      MatchingRow row;
      row.face_class = fc;
      row.corner = v;
      row.coeffs.assign(sys.cols, 0);
      int v1 = (f.to_other)(v);
      for (int s = 0; s < kPieceTypesPerTet; ++s) {
        row.coeffs[kPieceTypesPerTet * f.tet0 + s] +=
            piece_arcs[s].at(f.face0, v);
        row.coeffs[kPieceTypesPerTet * f.tet1 + s] -=
            piece_arcs[s].at(f.face1, v1);
      }
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

}  // namespace twonormal
