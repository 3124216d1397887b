#pragma once

// Test-only brute-force oracles. Everything here enumerates boxes directly
// and stays independent of the completion code paths it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "graverlift/exact.hpp"
#include "graverlift/graver.hpp"

namespace brute {

using graverlift::Int;
using graverlift::IntMatrix;
using graverlift::IntVector;

/// Visits every integer vector z with |z_j| <= bounds_j.
template <typename Visit>
inline void for_each_in_box(const std::vector<Int>& bounds, Visit visit) {
  IntVector z(bounds.size());
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == bounds.size()) {
      visit(z);
      return;
    }
    for (Int t = -bounds[j]; t <= bounds[j]; ++t) {
      z[j] = t;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

/// All nonzero kernel vectors of m inside the box.
inline std::vector<IntVector> kernel_vectors_in_box(const IntMatrix& m,
                                                    const std::vector<Int>& bounds) {
  std::vector<IntVector> out;
  for_each_in_box(bounds, [&](const IntVector& z) {
    if (!graverlift::is_zero(z) && m.maps_to_zero(z)) out.push_back(z);
  });
  return out;
}

/// Conformally minimal nonzero kernel vectors inside the box. Any conformal
/// summand of a box member lies in the same box, so pairwise comparison is
/// exhaustive.
inline std::vector<IntVector> minimal_kernel_vectors_in_box(
    const IntMatrix& m, const std::vector<Int>& bounds) {
  const std::vector<IntVector> ker = kernel_vectors_in_box(m, bounds);
  std::vector<IntVector> out;
  for (const IntVector& v : ker) {
    bool minimal = true;
    for (const IntVector& u : ker) {
      if (u == v) continue;
      if (graverlift::conforms(u, v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), graverlift::lex_less);
  return out;
}

/// Componentwise covering box of a set of vectors.
inline std::vector<Int> covering_box(const std::vector<IntVector>& vs,
                                     std::size_t dim) {
  std::vector<Int> bounds(dim, Int(0));
  for (const IntVector& v : vs)
    for (std::size_t j = 0; j < dim; ++j)
      bounds[j] = std::max(bounds[j], Int(abs(v[j])));
  return bounds;
}

/// Deterministic random matrix with entries in [lo, hi].
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Solves sum_j c_j * cols[j] = z over the rationals by plain Gaussian
/// elimination. Empty result: no solution (z outside the column span).
inline std::optional<std::vector<graverlift::Rat>> rational_solve(
    const std::vector<IntVector>& cols, const IntVector& z) {
  using graverlift::Rat;
  const std::size_t k = cols.size(), n = z.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rat(cols[j][i]);
    aug[i][k] = Rat(z[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[r]);
    const Rat inv = aug[r][c];
    for (std::size_t j = c; j <= k; ++j) aug[r][j] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rat f = aug[i][c];
      for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> sol(k, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = aug[i][k];
  return sol;
}

}  // namespace brute
