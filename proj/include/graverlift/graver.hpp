#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "graverlift/errors.hpp"
#include "graverlift/exact.hpp"

namespace graverlift {

/// Resource caps. Hitting a cap raises BudgetExceeded; results are never
/// silently truncated.
struct Budget {
  std::size_t completion_limit = 1'000'000;      // max completion set size
  std::uint64_t oracle_box_limit = 10'000'000;   // max candidates per box scan
  std::size_t circuit_column_limit = 64;         // max columns for circuit enumeration
  unsigned max_entry_bits = 8192;                // growth guard during completion
};

/// u conforms to v (u is a conformal summand of v): componentwise
/// sign-compatible with |u_j| <= |v_j|.
inline bool conforms(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size())
    throw DimensionError("conforms: vector length mismatch");
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == 0) continue;
    if (u[j] > 0 && (v[j] < u[j])) return false;
    if (u[j] < 0 && (v[j] > u[j])) return false;
  }
  return true;
}

/// The set of all conformally minimal nonzero integer kernel vectors of a
/// matrix. Sign-symmetric, duplicate-free, in a fixed lexicographic order.
struct GraverBasis {
  IntMatrix ambient_matrix;
  std::vector<IntVector> elements;

  bool empty() const { return elements.empty(); }
  std::size_t size() const { return elements.size(); }

  Int max_norm1() const {
    Int m = 0;
    for (const IntVector& v : elements) m = std::max(m, norm1(v));
    return m;
  }
};

/// Support-minimal nonzero integer kernel vectors with coprime entries,
/// both signs, canonically ordered.
struct CircuitSet {
  IntMatrix ambient_matrix;
  std::vector<IntVector> elements;

  std::size_t max_support() const {
    std::size_t m = 0;
    for (const IntVector& v : elements) {
      std::size_t s = 0;
      for (const Int& e : v)
        if (e != 0) ++s;
      m = std::max(m, s);
    }
    return m;
  }
};

namespace detail {

// Support masks let the completion reject most reduction candidates with a
// couple of word operations before touching any big-integer entry.
struct SupportMask {
  std::vector<std::uint64_t> pos, neg;

  static SupportMask of(const IntVector& v) {
    const std::size_t words = (v.size() + 63) / 64;
    SupportMask m;
    m.pos.assign(words, 0);
    m.neg.assign(words, 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] > 0) m.pos[j / 64] |= std::uint64_t{1} << (j % 64);
      if (v[j] < 0) m.neg[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return m;
  }

  // this's support fits inside o's, with matching signs
  bool sign_subset_of(const SupportMask& o) const {
    for (std::size_t w = 0; w < pos.size(); ++w) {
      if (pos[w] & ~o.pos[w]) return false;
      if (neg[w] & ~o.neg[w]) return false;
    }
    return true;
  }

  // no coordinate where this and o carry opposite signs
  bool sign_compatible(const SupportMask& o) const {
    for (std::size_t w = 0; w < pos.size(); ++w) {
      if (pos[w] & o.neg[w]) return false;
      if (neg[w] & o.pos[w]) return false;
    }
    return true;
  }
};

struct CompletionElem {
  IntVector v;
  SupportMask mask;
  Int n1;
};

inline bool entry_bits_ok(const IntVector& v, unsigned max_bits) {
  for (const Int& e : v)
    if (e != 0 && boost::multiprecision::msb(Int(abs(e))) + 1 > max_bits)
      return false;
  return true;
}

// u conforms to r, assuming the masks already matched.
inline bool abs_le(const IntVector& u, const IntVector& r) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > 0 && u[j] > r[j]) return false;
    if (u[j] < 0 && u[j] < r[j]) return false;
  }
  return true;
}

}  // namespace detail

/// Graver basis by completion. Seeded with a lattice basis of the saturated
/// integer kernel plus negatives; pairwise sums are reduced to a conformal
/// normal form (subtract any current element that conforms) and nonzero
/// normal forms join the set, to a fixpoint. A final interreduction pass
/// removes non-minimal survivors, so the result does not depend on insertion
/// order. Elements come out sorted lexicographically.
inline GraverBasis graver_basis(const IntMatrix& m, const Budget& budget = {}) {
  using detail::CompletionElem;
  using detail::SupportMask;

  std::vector<CompletionElem> g;

  auto insert = [&](IntVector v) {
    if (g.size() + 1 > budget.completion_limit)
      throw BudgetExceeded("completion set exceeds element budget");
    if (!detail::entry_bits_ok(v, budget.max_entry_bits))
      throw BudgetExceeded("completion entry exceeds size budget");
    CompletionElem e;
    e.mask = SupportMask::of(v);
    e.n1 = norm1(v);
    e.v = std::move(v);
    g.push_back(std::move(e));
  };

  // Reduce r conformally by the current set; true when r survives nonzero.
  auto normal_form = [&](IntVector& r, SupportMask& rm, Int& rn) -> bool {
    bool reduced = true;
    while (reduced) {
      if (rn == 0) return false;
      reduced = false;
      for (const CompletionElem& u : g) {
        if (u.n1 > rn) continue;
        if (!u.mask.sign_subset_of(rm)) continue;
        if (!detail::abs_le(u.v, r)) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= u.v[j];
        rm = SupportMask::of(r);
        rn -= u.n1;  // conformal subtraction is norm-additive
        reduced = true;
        break;
      }
    }
    return true;
  };

  for (const IntVector& b : integer_kernel_basis(m)) {
    insert(b);
    insert(negated(b));
  }

  std::size_t processed = 0;
  while (processed < g.size()) {
    const std::size_t frontier = g.size();
    for (std::size_t j = processed; j < frontier; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        // A sign-compatible pair sums to something reducible by its parts.
        if (g[i].mask.sign_compatible(g[j].mask)) continue;
        IntVector s = vec_add(g[i].v, g[j].v);
        if (is_zero(s)) continue;
        SupportMask sm = SupportMask::of(s);
        Int sn = norm1(s);
        if (normal_form(s, sm, sn)) {
          insert(s);
          insert(negated(s));
        }
      }
    }
    processed = frontier;
  }

  // Interreduction: drop anything another element conforms to.
  std::vector<bool> drop(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      if (g[b].n1 >= g[a].n1) continue;  // equal vectors cannot occur
      if (!g[b].mask.sign_subset_of(g[a].mask)) continue;
      if (detail::abs_le(g[b].v, g[a].v)) {
        drop[a] = true;
        break;
      }
    }
  }

  GraverBasis result;
  result.ambient_matrix = m;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (!drop[a]) result.elements.push_back(std::move(g[a].v));
  std::sort(result.elements.begin(), result.elements.end(), lex_less);
  return result;
}

namespace detail {

// Depth-first scan of the conformal box {z : z conforms to x}, restricted to
// the support of x. Rows of m are checked as soon as every support column
// touching them has been assigned, which prunes most of the box. Calls
// visit(z) for each kernel vector found (z == 0 and z == x included);
// visit returning true stops the scan.
template <typename Visit>
inline void scan_conformal_kernel_box(const IntMatrix& m, const IntVector& x,
                                      Visit visit) {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0) support.push_back(j);

  const std::size_t nr = m.rows();
  // finalize_at[p]: rows whose support columns are exhausted at position p
  std::vector<std::vector<std::size_t>> finalize_at(support.size());
  std::vector<bool> row_used(nr, false);
  for (std::size_t r = 0; r < nr; ++r) {
    std::size_t last = support.size();
    for (std::size_t p = 0; p < support.size(); ++p)
      if (m(r, support[p]) != 0) last = p;
    if (last != support.size()) {
      finalize_at[last].push_back(r);
      row_used[r] = true;
    }
  }
  // Rows never touching the support force nothing (their product is 0).

  IntVector z(x.size());
  IntVector partial(nr);
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (stop) return;
    if (p == support.size()) {
      stop = visit(z);
      return;
    }
    const std::size_t col = support[p];
    const Int step = x[col] > 0 ? 1 : -1;
    const Int bound = abs(x[col]);
    Int applied = 0;
    for (Int t = 0; t <= bound; ++t) {
      if (t > 0) {
        for (std::size_t r = 0; r < nr; ++r)
          if (m(r, col) != 0) partial[r] += m(r, col) * step;
        applied = t;
      }
      z[col] = t * step;
      bool feasible = true;
      for (std::size_t r : finalize_at[p])
        if (partial[r] != 0) {
          feasible = false;
          break;
        }
      if (feasible) self(self, p + 1);
      if (stop) break;
    }
    for (std::size_t r = 0; r < nr; ++r)
      if (m(r, col) != 0) partial[r] -= m(r, col) * step * applied;
    z[col] = 0;
  };
  rec(rec, 0);
}

}  // namespace detail

/// Independent brute-force membership oracle: x (nonzero) lies in the Graver
/// basis of m iff m*x = 0 and no other nonzero kernel vector conforms to x.
/// Searches the whole conformal box below x, so it depends on nothing the
/// completion does. Box sizes beyond the budget raise BudgetExceeded.
inline bool is_graver_element(const IntMatrix& m, const IntVector& x,
                              const Budget& budget = {}) {
  if (x.size() != m.cols())
    throw DimensionError("is_graver_element: vector length mismatch");
  if (is_zero(x)) throw DimensionError("is_graver_element: x must be nonzero");
  if (!m.maps_to_zero(x)) return false;

  Int box = 1;
  for (const Int& e : x) {
    if (e == 0) continue;
    box *= abs(e) + 1;
    if (box > budget.oracle_box_limit)
      throw BudgetExceeded("conformal box exceeds oracle budget");
  }

  bool found_reducer = false;
  detail::scan_conformal_kernel_box(m, x, [&](const IntVector& z) {
    if (is_zero(z) || z == x) return false;
    found_reducer = true;
    return true;
  });
  return !found_reducer;
}

/// All circuits of m: enumerate column subsets of size up to rank+1 whose
/// rational kernel is one-dimensional with full support on the subset.
/// Entries are made coprime; the canonical representative has a positive
/// leading entry and both signs are stored.
inline CircuitSet circuits(const IntMatrix& m, const Budget& budget = {}) {
  const std::size_t nc = m.cols();
  if (nc > budget.circuit_column_limit)
    throw BudgetExceeded("column count exceeds circuit enumeration budget");

  const std::size_t r = rank(m);
  CircuitSet result;
  result.ambient_matrix = m;

  std::vector<std::size_t> idx;
  auto consider = [&](const std::vector<std::size_t>& cols) {
    IntMatrix sub(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(i, cols[j]);
    std::vector<IntVector> ker = integer_kernel_basis(sub);
    if (ker.size() != 1) return;
    IntVector c = ker[0];
    for (const Int& e : c)
      if (e == 0) return;  // kernel vector must cover the whole subset
    Int d = gcd_all(c);
    if (d > 1)
      for (Int& e : c) e /= d;
    IntVector full(nc);
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = c[j];
    result.elements.push_back(negated(full));
    result.elements.push_back(std::move(full));
  };

  // subsets in lexicographic order, sizes 1..rank+1
  for (std::size_t t = 1; t <= r + 1 && t <= nc; ++t) {
    idx.assign(t, 0);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      consider(idx);
      std::size_t i = t;
      while (i > 0 && idx[i - 1] == nc - t + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::sort(result.elements.begin(), result.elements.end(), lex_less);
  return result;
}

/// Graver complexity g(A, B): the maximum 1-norm over the Graver basis of
/// the matrix whose columns are B*v for every v in G(A), both signs.
/// Returns 0 when G(A) is empty.
inline Int graver_complexity(const IntMatrix& a, const IntMatrix& b,
                             const Budget& budget = {}) {
  if (a.cols() != b.cols())
    throw DimensionError("graver_complexity: A and B column counts differ");
  GraverBasis ga = graver_basis(a, budget);
  if (ga.empty()) return 0;
  std::vector<IntVector> cols;
  cols.reserve(ga.size());
  for (const IntVector& v : ga.elements) cols.push_back(b.apply(v));
  GraverBasis g2 = graver_basis(IntMatrix::from_columns(cols), budget);
  return g2.max_norm1();
}

}  // namespace graverlift
