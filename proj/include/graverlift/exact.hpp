#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graverlift/errors.hpp"

namespace graverlift {

// All arithmetic in this library is exact. Coefficients produced by the
// lifting construction grow geometrically with the number of copies, so
// everything runs on arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
}

inline IntVector negated(IntVector v) {
  for (Int& e : v) e = -e;
  return v;
}

inline Int norm1(const IntVector& v) {
  Int s = 0;
  for (const Int& e : v) s += abs(e);
  return s;
}

inline IntVector vec_add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch in addition");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch in subtraction");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector vec_scaled(const IntVector& a, const Int& c) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

/// gcd of the absolute values; gcd of the empty list is 0.
template <typename Range>
inline Int gcd_all(const Range& values) {
  Int g = 0;
  for (const auto& v : values) {
    g = boost::multiprecision::gcd(g, Int(abs(Int(v))));
    if (g == 1) break;
  }
  return g;
}

inline Int gcd_all(std::initializer_list<Int> values) {
  return gcd_all<std::initializer_list<Int>>(values);
}

/// Dense exact-integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("entry count does not match rows*cols");
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols[0].size();
    IntMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      if (cols[j].size() != r) throw DimensionError("ragged column list");
      for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const IntVector& entries() const { return data_; }

  IntVector row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  /// m * x
  IntVector apply(const IntVector& x) const {
    if (x.size() != cols_)
      throw DimensionError("matrix-vector dimension mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

  bool maps_to_zero(const IntVector& x) const { return is_zero(apply(x)); }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) {
    return !(a == b);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination.
inline std::size_t rank(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntVector> a(nr);
  for (std::size_t i = 0; i < nr; ++i) a[i] = m.row(i);

  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t pivot = r;
    while (pivot < nr && a[pivot][c] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        // One-step Bareiss update; the division is exact.
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Dimension of the rational null space: cols - rank.
inline std::size_t rational_kernel_dimension(const IntMatrix& m) {
  return m.cols() - rank(m);
}

/// Lattice basis of ker(m) over the integers (the saturated kernel lattice).
///
/// Column-style Hermite reduction: column operations recorded in a unimodular
/// U bring m into column echelon form; the U-columns matching the zero
/// echelon columns generate ker(m) over Z exactly, not just a finite-index
/// sublattice. Pivot scan order is fixed, so output is deterministic; each
/// basis vector is normalized to a positive leading entry.
inline std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntVector> h(nr, IntVector(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) h[i][j] = m(i, j);

  std::vector<IntVector> u(nc, IntVector(nc));  // u[j] is column j of U
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t i = 0; i < nc; ++i) u[j][i] = 0;
    u[j][j] = 1;
  }
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < nr; ++i) std::swap(h[i][a], h[i][b]);
    std::swap(u[a], u[b]);
  };
  auto submul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < nr; ++i) h[i][dst] -= q * h[i][src];
    for (std::size_t i = 0; i < nc; ++i) u[dst][i] -= q * u[src][i];
  };

  std::size_t pc = 0;  // next pivot column
  for (std::size_t row = 0; row < nr && pc < nc; ++row) {
    for (;;) {
      // Smallest nonzero |entry| in this row among candidate columns.
      std::size_t best = nc;
      for (std::size_t j = pc; j < nc; ++j) {
        if (h[row][j] == 0) continue;
        if (best == nc || abs(h[row][j]) < abs(h[row][best])) best = j;
      }
      if (best == nc) break;  // row is zero on the remaining columns
      swap_cols(best, pc);
      bool clean = true;
      for (std::size_t j = pc + 1; j < nc; ++j) {
        if (h[row][j] == 0) continue;
        submul_col(j, pc, Int(h[row][j] / h[row][pc]));
        if (h[row][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (pc < nc && h[row][pc] != 0) ++pc;
  }

  std::vector<IntVector> basis;
  basis.reserve(nc - pc);
  for (std::size_t j = pc; j < nc; ++j) {
    IntVector v = u[j];
    for (const Int& e : v) {
      if (e == 0) continue;
      if (e < 0) v = negated(std::move(v));
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace graverlift
