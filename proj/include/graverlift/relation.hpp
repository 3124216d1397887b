#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graverlift/errors.hpp"
#include "graverlift/exact.hpp"
#include "graverlift/graver.hpp"
#include "graverlift/nfold.hpp"

namespace graverlift {

/// A zero linear combination sum h_i * x^i = 0 on kernel elements of an
/// M-fold matrix, with coprime nonzero integer coefficients and the
/// uniqueness property: the column matrix of the x^i has a one-dimensional
/// rational kernel, so the coefficients are determined up to one scalar.
struct PrimitiveRelation {
  IntMatrix base_matrix;  // the A whose M-fold the elements live in
  std::size_t copies = 0;
  std::vector<BrickVector> elements;
  std::vector<Int> coefficients;

  std::size_t size() const { return elements.size(); }

  Int coefficient_sum_abs() const {
    Int s = 0;
    for (const Int& h : coefficients) s += abs(h);
    return s;
  }
};

enum class CheckResult { not_run, passed, failed, budget_exceeded };

inline const char* to_string(CheckResult r) {
  switch (r) {
    case CheckResult::not_run: return "not run";
    case CheckResult::passed: return "pass";
    case CheckResult::failed: return "FAIL";
    case CheckResult::budget_exceeded: return "budget exceeded";
  }
  return "?";
}

/// Outcome of the relation checks. The overall verdict is the conjunction
/// of the checks that actually ran; skipped or budget-stopped checks do not
/// count either way.
struct VerificationReport {
  CheckResult sum_zero = CheckResult::not_run;
  CheckResult coefficients_nonzero = CheckResult::not_run;
  CheckResult coefficients_coprime = CheckResult::not_run;
  CheckResult kernel_dim_one = CheckResult::not_run;
  std::vector<CheckResult> membership;  // one slot per element

  bool overall() const {
    auto bad = [](CheckResult r) { return r == CheckResult::failed; };
    if (bad(sum_zero) || bad(coefficients_nonzero) ||
        bad(coefficients_coprime) || bad(kernel_dim_one))
      return false;
    return std::none_of(membership.begin(), membership.end(), bad);
  }

  bool algebraic_all_passed() const {
    return sum_zero == CheckResult::passed &&
           coefficients_nonzero == CheckResult::passed &&
           coefficients_coprime == CheckResult::passed &&
           kernel_dim_one == CheckResult::passed;
  }
};

namespace detail {

inline IntMatrix element_column_matrix(const std::vector<BrickVector>& elements) {
  std::vector<IntVector> cols;
  cols.reserve(elements.size());
  for (const BrickVector& e : elements) cols.push_back(e.entries());
  return IntMatrix::from_columns(cols);
}

inline void require_consistent(const std::vector<BrickVector>& elements,
                               const std::vector<Int>& coefficients) {
  if (elements.size() != coefficients.size())
    throw DimensionError("element and coefficient counts differ");
  if (elements.empty()) throw DimensionError("empty relation");
  for (const BrickVector& e : elements)
    if (!e.same_shape(elements.front()))
      throw DimensionError("elements of mixed ambient shape");
}

}  // namespace detail

/// Algebraic primitivity checks: weighted sum zero, coefficients nonzero and
/// coprime, element columns with one-dimensional kernel. Membership in the
/// Graver basis is a separate, more expensive check (verify_membership).
inline VerificationReport verify_primitive(
    const std::vector<BrickVector>& elements,
    const std::vector<Int>& coefficients) {
  detail::require_consistent(elements, coefficients);

  VerificationReport rep;
  IntVector acc(elements.front().entries().size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const IntVector& e = elements[i].entries();
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] += coefficients[i] * e[j];
  }
  rep.sum_zero = is_zero(acc) ? CheckResult::passed : CheckResult::failed;

  const bool nonzero = std::none_of(coefficients.begin(), coefficients.end(),
                                    [](const Int& h) { return h == 0; });
  rep.coefficients_nonzero = nonzero ? CheckResult::passed : CheckResult::failed;
  rep.coefficients_coprime =
      gcd_all(coefficients) == 1 ? CheckResult::passed : CheckResult::failed;

  const std::size_t dim =
      rational_kernel_dimension(detail::element_column_matrix(elements));
  rep.kernel_dim_one = dim == 1 ? CheckResult::passed : CheckResult::failed;
  return rep;
}

inline VerificationReport verify_primitive(const PrimitiveRelation& rel) {
  return verify_primitive(rel.elements, rel.coefficients);
}

/// Runs the brute-force Graver membership oracle on every element against
/// the assembled M-fold matrix. A budget stop on one element is recorded
/// and does not abort the others.
inline VerificationReport verify_membership(const PrimitiveRelation& rel,
                                            const Budget& budget = {}) {
  VerificationReport rep;
  const IntMatrix c = assemble_mfold(rel.base_matrix, rel.copies);
  rep.membership.reserve(rel.size());
  for (const BrickVector& e : rel.elements) {
    try {
      rep.membership.push_back(is_graver_element(c, e.entries(), budget)
                                   ? CheckResult::passed
                                   : CheckResult::failed);
    } catch (const BudgetExceeded&) {
      rep.membership.push_back(CheckResult::budget_exceeded);
    }
  }
  return rep;
}

/// The lower bound a verified primitive relation certifies for the Graver
/// complexity of its ambient M-fold matrix: the coefficient 1-norm.
inline Int lower_bound_from_relation(const PrimitiveRelation& rel) {
  return rel.coefficient_sum_abs();
}

/// Flip element signs until every coefficient is positive. Graver bases are
/// sign-symmetric, so membership survives; the weighted sum is unchanged.
inline PrimitiveRelation normalize_signs(PrimitiveRelation rel) {
  detail::require_consistent(rel.elements, rel.coefficients);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (rel.coefficients[i] == 0)
      throw DimensionError("zero coefficient in relation");
    if (rel.coefficients[i] < 0) {
      rel.coefficients[i] = -rel.coefficients[i];
      rel.elements[i] = negated(rel.elements[i]);
    }
  }
  return rel;
}

/// Elements that can serve as the pivot of the lifting step: type > 2.
inline std::vector<std::size_t> pivot_candidates(const PrimitiveRelation& rel) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rel.size(); ++i)
    if (type_of(rel.elements[i]) > 2) out.push_back(i);
  return out;
}

struct CanonicalizedRelation {
  PrimitiveRelation relation;
  std::vector<std::size_t> brick_permutation;  // new position -> old brick
  std::vector<std::size_t> element_order;      // new position -> old element
};

/// Rewrites a relation into the shape the lifting step consumes: one brick
/// permutation, applied to all elements at once, puts the chosen pivot
/// element's nonzero bricks into the leading positions plus the final one;
/// elements are reordered so the pivot comes first, followed by lead_count
/// elements whose (new) last brick is the negated final pivot brick.
///
/// Already-canonical input comes back unchanged with identity maps. The
/// final-brick choice is tried last-nonzero-brick first so that near-
/// canonical inputs stay put.
inline CanonicalizedRelation canonicalize_for_lift(const PrimitiveRelation& rel,
                                                   std::size_t pivot_index,
                                                   std::size_t lead_count) {
  detail::require_consistent(rel.elements, rel.coefficients);
  if (pivot_index >= rel.size())
    throw DimensionError("pivot index out of range");
  if (lead_count + 1 > rel.size())
    throw NotCanonicalizable("lead count exceeds available elements");

  const BrickVector& pivot = rel.elements[pivot_index];
  const std::size_t m = pivot.copies();
  const std::size_t g = type_of(pivot);
  if (g <= 2)
    throw NotCanonicalizable("pivot element must have type > 2");

  std::vector<std::size_t> nz, zz;
  for (std::size_t i = 0; i < m; ++i)
    (pivot.brick_is_zero(i) ? zz : nz).push_back(i);

  // Candidate bricks to land in the final slot: last nonzero first.
  std::vector<std::size_t> candidates(nz.rbegin(), nz.rend());
  for (std::size_t final_brick : candidates) {
    const IntVector neg_last = negated(pivot.brick(final_brick));
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (i != pivot_index && rel.elements[i].brick(final_brick) == neg_last)
        eligible.push_back(i);
    if (eligible.size() < lead_count) continue;

    std::vector<std::size_t> perm;
    perm.reserve(m);
    for (std::size_t b : nz)
      if (b != final_brick) perm.push_back(b);
    perm.insert(perm.end(), zz.begin(), zz.end());
    perm.push_back(final_brick);

    std::vector<std::size_t> order;
    order.reserve(rel.size());
    order.push_back(pivot_index);
    for (std::size_t i = 0; i < lead_count; ++i) order.push_back(eligible[i]);
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (std::find(order.begin(), order.end(), i) == order.end())
        order.push_back(i);

    CanonicalizedRelation out;
    out.brick_permutation = perm;
    out.element_order = order;
    out.relation.base_matrix = rel.base_matrix;
    out.relation.copies = rel.copies;
    for (std::size_t i : order) {
      out.relation.elements.push_back(permute_bricks(rel.elements[i], perm));
      out.relation.coefficients.push_back(rel.coefficients[i]);
    }
    return out;
  }
  throw NotCanonicalizable("fewer eligible elements than the requested lead count");
}

}  // namespace graverlift
