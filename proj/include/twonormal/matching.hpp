#pragma once

#include <string>
#include <vector>

#include "twonormal/pieces.hpp"
#include "twonormal/skeleton.hpp"
#include "twonormal/triangulation.hpp"

namespace twonormal {

// One row per (interior face class, corner of the canonical side's face):
// the pieces on the two sides must contribute equal arc counts at matched
// corners.  Columns follow the per-tet coordinate blocks of piece_catalog.
struct MatchingRow {
  int face_class = 0;
  int corner = 0;  // vertex of the canonical side's face
  std::vector<int> coeffs;
};

struct MatchingSystem {
  int cols = 0;
  std::vector<std::string> col_labels;
  std::vector<MatchingRow> rows;

  std::vector<std::vector<int>> coefficient_rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(rows.size());
    for (const MatchingRow& r : rows) out.push_back(r.coeffs);
    return out;
  }
};

MatchingSystem build_matching_system(const Triangulation& tri,
                                     const Skeleton& sk);

}  // namespace twonormal
