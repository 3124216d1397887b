#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "graverlift/errors.hpp"
#include "graverlift/exact.hpp"

namespace graverlift {

/// Ingredients of the block matrix [A,B]^(N): a top row of N copies of B
/// over a block diagonal of N copies of A. A and B must agree on the
/// column count.
struct NFoldSpec {
  IntMatrix a;
  IntMatrix b;
  std::size_t copies = 1;
};

inline IntMatrix assemble_nfold(const NFoldSpec& spec) {
  const std::size_t r = spec.a.rows(), c = spec.a.cols(), d = spec.b.rows();
  if (spec.b.cols() != c)
    throw InvalidSpec("A and B must have the same number of columns");
  if (spec.copies < 1) throw InvalidSpec("copy count must be at least 1");
  const std::size_t n = spec.copies;

  IntMatrix m(d + n * r, n * c);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, k * c + j) = spec.b(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(d + k * r + i, k * c + j) = spec.a(i, j);
  return m;
}

/// The M-fold matrix: the N-fold with B the c x c identity. Kernel vectors
/// split into M bricks of length c, each in ker(A), whose sum is zero.
inline IntMatrix assemble_mfold(const IntMatrix& a, std::size_t copies) {
  return assemble_nfold({a, IntMatrix::identity(a.cols()), copies});
}

/// A vector in Z^(M*c) seen as M bricks of length c, i.e. an M x c table.
/// Bricks of distinct ambient shapes never mix silently; shape mismatch is
/// a hard error.
class BrickVector {
public:
  BrickVector() = default;

  BrickVector(std::size_t copies, std::size_t brick_len)
      : copies_(copies), brick_len_(brick_len), entries_(copies * brick_len) {}

  BrickVector(std::size_t copies, std::size_t brick_len, IntVector entries)
      : copies_(copies), brick_len_(brick_len), entries_(std::move(entries)) {
    if (entries_.size() != copies_ * brick_len_)
      throw DimensionError("entry count does not match copies*brick_len");
  }

  static BrickVector from_bricks(const std::vector<IntVector>& bricks) {
    if (bricks.empty()) throw DimensionError("at least one brick required");
    const std::size_t c = bricks[0].size();
    IntVector flat;
    flat.reserve(bricks.size() * c);
    for (const IntVector& b : bricks) {
      if (b.size() != c) throw DimensionError("bricks of unequal length");
      flat.insert(flat.end(), b.begin(), b.end());
    }
    return BrickVector(bricks.size(), c, std::move(flat));
  }

  std::size_t copies() const { return copies_; }
  std::size_t brick_len() const { return brick_len_; }
  const IntVector& entries() const { return entries_; }

  /// Brick i (0-indexed) as a length-c vector; row i of the table view.
  IntVector brick(std::size_t i) const {
    const auto b = entries_.begin() + static_cast<std::ptrdiff_t>(i * brick_len_);
    return IntVector(b, b + static_cast<std::ptrdiff_t>(brick_len_));
  }

  void set_brick(std::size_t i, const IntVector& v) {
    if (v.size() != brick_len_) throw DimensionError("brick length mismatch");
    std::copy(v.begin(), v.end(),
              entries_.begin() + static_cast<std::ptrdiff_t>(i * brick_len_));
  }

  bool brick_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < brick_len_; ++j)
      if (entries_[i * brick_len_ + j] != 0) return false;
    return true;
  }

  bool same_shape(const BrickVector& o) const {
    return copies_ == o.copies_ && brick_len_ == o.brick_len_;
  }

  friend bool operator==(const BrickVector& a, const BrickVector& b) {
    return a.copies_ == b.copies_ && a.brick_len_ == b.brick_len_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const BrickVector& a, const BrickVector& b) {
    return !(a == b);
  }

private:
  std::size_t copies_ = 0;
  std::size_t brick_len_ = 0;
  IntVector entries_;
};

inline BrickVector negated(const BrickVector& x) {
  return BrickVector(x.copies(), x.brick_len(), negated(x.entries()));
}

inline BrickVector brick_add(const BrickVector& a, const BrickVector& b) {
  if (!a.same_shape(b)) throw DimensionError("brick shape mismatch");
  return BrickVector(a.copies(), a.brick_len(), vec_add(a.entries(), b.entries()));
}

inline BrickVector brick_scaled(const BrickVector& a, const Int& c) {
  return BrickVector(a.copies(), a.brick_len(), vec_scaled(a.entries(), c));
}

/// Number of nonzero bricks.
inline std::size_t type_of(const BrickVector& x) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < x.copies(); ++i)
    if (!x.brick_is_zero(i)) ++t;
  return t;
}

/// Copies M -> M+1 with a fresh zero brick at the end.
inline BrickVector append_zero_brick(const BrickVector& x) {
  IntVector e = x.entries();
  e.resize(e.size() + x.brick_len());
  return BrickVector(x.copies() + 1, x.brick_len(), std::move(e));
}

/// Copies M -> M+1: the old last brick moves to the new final position and
/// its former slot becomes zero.
inline BrickVector move_last_brick(const BrickVector& x) {
  BrickVector y(x.copies() + 1, x.brick_len());
  for (std::size_t i = 0; i + 1 < x.copies(); ++i) y.set_brick(i, x.brick(i));
  y.set_brick(x.copies(), x.brick(x.copies() - 1));
  return y;
}

/// Copies M -> M-1 by replacing the last two bricks with their sum.
/// Inverse of both append_zero_brick and move_last_brick.
inline BrickVector merge_last_two_bricks(const BrickVector& x) {
  if (x.copies() < 2)
    throw DimensionError("need at least two bricks to merge");
  BrickVector y(x.copies() - 1, x.brick_len());
  for (std::size_t i = 0; i + 2 < x.copies(); ++i) y.set_brick(i, x.brick(i));
  y.set_brick(x.copies() - 2,
              vec_add(x.brick(x.copies() - 2), x.brick(x.copies() - 1)));
  return y;
}

/// Reorder bricks: result brick i is x's brick perm[i]. perm must be a
/// permutation of 0..M-1.
inline BrickVector permute_bricks(const BrickVector& x,
                                  const std::vector<std::size_t>& perm) {
  if (perm.size() != x.copies())
    throw DimensionError("permutation length must equal copy count");
  BrickVector y(x.copies(), x.brick_len());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]])
      throw DimensionError("not a permutation");
    seen[perm[i]] = true;
    y.set_brick(i, x.brick(perm[i]));
  }
  return y;
}

}  // namespace graverlift
