#include "twonormal/dd.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace twonormal {

namespace {

std::vector<int> all_columns(int cols) {
  std::vector<int> active(cols);
  std::iota(active.begin(), active.end(), 0);
  return active;
}

void check_active(int cols, const std::vector<int>& active) {
  std::vector<bool> seen(cols, false);
  for (int c : active) {
    if (c < 0 || c >= cols)
      throw std::invalid_argument("active column out of range");
    if (seen[c]) throw std::invalid_argument("duplicate active column");
    seen[c] = true;
  }
}

// Rows restricted to the active columns, all-zero rows dropped.
std::vector<std::vector<BigInt>> project_rows(
    const std::vector<std::vector<int>>& rows, int cols,
    const std::vector<int>& active) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("row width does not match column count");
    std::vector<BigInt> proj(active.size());
    bool nonzero = false;
    for (size_t i = 0; i < active.size(); ++i) {
      proj[i] = row[active[i]];
      if (proj[i] != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(proj));
  }
  return out;
}

std::vector<bool> support(const std::vector<BigInt>& v) {
  std::vector<bool> s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = (v[i] != 0);
  return s;
}

// Expands a projected ray back to the full column space and sorts.
std::vector<std::vector<BigInt>> expand_and_sort(
    std::vector<std::vector<BigInt>> rays, int cols,
    const std::vector<int>& active) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    std::vector<BigInt> full(cols, 0);
    for (size_t i = 0; i < active.size(); ++i) full[active[i]] = r[i];
    out.push_back(std::move(full));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> extreme_rays(
    const std::vector<std::vector<int>>& rows, int cols,
    const std::vector<int>& active) {
  check_active(cols, active);
  const int d = static_cast<int>(active.size());
  auto eqs = project_rows(rows, cols, active);

  std::vector<std::vector<BigInt>> rays;
  for (int i = 0; i < d; ++i) {
    std::vector<BigInt> unit(d, 0);
    unit[i] = 1;
    rays.push_back(std::move(unit));
  }

  for (const auto& eq : eqs) {
    std::vector<BigInt> dot(rays.size());
    std::vector<size_t> pos, neg, zero;
    for (size_t i = 0; i < rays.size(); ++i) {
      BigInt s = 0;
      for (int j = 0; j < d; ++j) s += eq[j] * rays[i][j];
      dot[i] = s;
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    std::vector<std::vector<bool>> supp(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) supp[i] = support(rays[i]);

    std::vector<std::vector<BigInt>> next;
    for (size_t i : zero) next.push_back(rays[i]);
    for (size_t u : pos)
      for (size_t w : neg) {
        // Adjacency: no third ray's support fits inside supp(u) | supp(w).
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == u || r == w) continue;
          bool inside = true;
          for (int j = 0; j < d && inside; ++j)
            if (supp[r][j] && !supp[u][j] && !supp[w][j]) inside = false;
          if (inside) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<BigInt> comb(d);
        for (int j = 0; j < d; ++j)
          comb[j] = dot[u] * rays[w][j] - dot[w] * rays[u][j];
        make_primitive(comb);
        next.push_back(std::move(comb));
      }
    rays = std::move(next);
    if (rays.empty()) break;
  }

  return expand_and_sort(std::move(rays), cols, active);
}

std::vector<std::vector<BigInt>> extreme_rays(
    const std::vector<std::vector<int>>& rows, int cols) {
  return extreme_rays(rows, cols, all_columns(cols));
}

namespace {

// Kernel of the rational matrix, returned as a basis of columns.
// Plain Gauss-Jordan; sizes here are tiny.
std::vector<std::vector<BigRat>> kernel_basis(
    std::vector<std::vector<BigRat>> m, int width) {
  const int height = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < width && row < height; ++col) {
    int p = -1;
    for (int r = row; r < height; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    BigRat inv = m[row][col];
    for (int c = 0; c < width; ++c) m[row][c] /= inv;
    for (int r = 0; r < height; ++r) {
      if (r == row || m[r][col] == 0) continue;
      BigRat f = m[r][col];
      for (int c = 0; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(width, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<BigRat>> basis;
  for (int free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRat> v(width, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<BigInt>> brute_force_rays(
    const std::vector<std::vector<int>>& rows, int cols,
    const std::vector<int>& active) {
  check_active(cols, active);
  const int d = static_cast<int>(active.size());
  if (d > 24) throw std::invalid_argument("support enumeration too large");
  auto eqs = project_rows(rows, cols, active);

  std::vector<std::vector<BigInt>> found;
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    std::vector<int> cols_s;
    for (int j = 0; j < d; ++j)
      if (mask & (1ul << j)) cols_s.push_back(j);

    std::vector<std::vector<BigRat>> m;
    for (const auto& eq : eqs) {
      std::vector<BigRat> row(cols_s.size());
      for (size_t i = 0; i < cols_s.size(); ++i) row[i] = BigRat(eq[cols_s[i]]);
      m.push_back(std::move(row));
    }
    auto basis = kernel_basis(std::move(m), static_cast<int>(cols_s.size()));
    if (basis.size() != 1) continue;

    // The generator must be strictly signed on the whole candidate support.
    const auto& g = basis[0];
    int sign = 0;
    bool ok = true;
    for (const BigRat& x : g) {
      if (x == 0) {
        ok = false;
        break;
      }
      int s = (x > 0) ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Clear denominators, orient positively, reduce.
    BigInt lcm_den = 1;
    for (const BigRat& x : g)
      lcm_den = boost::multiprecision::lcm(lcm_den,
                                           boost::multiprecision::denominator(x));
    std::vector<BigInt> ray(d, 0);
    for (size_t i = 0; i < cols_s.size(); ++i) {
      BigRat scaled = g[i] * BigRat(lcm_den) * sign;
      assert(boost::multiprecision::denominator(scaled) == 1);
      ray[cols_s[i]] = boost::multiprecision::numerator(scaled);
    }
    make_primitive(ray);
    found.push_back(std::move(ray));
  }

  // Extreme supports are incomparable; drop anything that strictly contains
  // another candidate's support (belt and braces, duplicates included).
  std::vector<std::vector<bool>> supp;
  supp.reserve(found.size());
  for (const auto& r : found) supp.push_back(support(r));
  std::vector<std::vector<BigInt>> kept;
  for (size_t i = 0; i < found.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < found.size() && minimal; ++j) {
      if (i == j || supp[i] == supp[j]) continue;
      bool contains = true;
      for (int c = 0; c < d && contains; ++c)
        if (supp[j][c] && !supp[i][c]) contains = false;
      if (contains) minimal = false;
    }
    if (minimal) kept.push_back(found[i]);
  }

  return expand_and_sort(std::move(kept), cols, active);
}

std::vector<std::vector<BigInt>> brute_force_rays(
    const std::vector<std::vector<int>>& rows, int cols) {
  return brute_force_rays(rows, cols, all_columns(cols));
}

}  // namespace twonormal
