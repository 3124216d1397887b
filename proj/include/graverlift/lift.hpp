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
#include "graverlift/relation.hpp"

namespace graverlift {

/// Gatekeeper for one lifting step. Derived from a relation in canonical
/// shape with positive coefficients:
///   base_type  - number of nonzero bricks of the pivot element (must be > 2)
///   lead_count - how many elements after the pivot are consumed by the
///                last-brick condition
///   slack      - sum of the lead coefficients minus the pivot coefficient
/// The three conditions:
///   (a) pivot bricks sit in the leading slots plus the final one and form
///       a primitive all-ones relation,
///   (b) every lead element's last brick is the negated final pivot brick,
///   (c) gcd(base_type - 1, slack) = 1.
struct LiftCertificate {
  std::size_t base_type = 0;
  std::size_t lead_count = 0;
  Int slack;
  bool preconditions_ok = false;
  bool condition_a = false;
  bool condition_b = false;
  bool condition_c = false;
  std::string diagnostics;

  bool all() const {
    return preconditions_ok && condition_a && condition_b && condition_c;
  }
};

/// Evaluates the three lift conditions. Failed conditions are reported in
/// the certificate, not thrown.
inline LiftCertificate check_lift_conditions(const PrimitiveRelation& rel,
                                             std::size_t lead_count) {
  LiftCertificate cert;
  cert.lead_count = lead_count;

  auto fail = [&](const std::string& why) {
    if (!cert.diagnostics.empty()) cert.diagnostics += "; ";
    cert.diagnostics += why;
  };

  cert.preconditions_ok = true;
  if (rel.elements.empty() || rel.elements.size() != rel.coefficients.size()) {
    cert.preconditions_ok = false;
    fail("malformed relation");
    return cert;
  }
  if (lead_count + 1 > rel.size()) {
    cert.preconditions_ok = false;
    fail("lead count exceeds available elements");
    return cert;
  }
  for (const Int& h : rel.coefficients)
    if (h <= 0) {
      cert.preconditions_ok = false;
      fail("coefficients must be positive (normalize signs first)");
      return cert;
    }

  const BrickVector& pivot = rel.elements[0];
  const std::size_t m = pivot.copies();
  const std::size_t g = type_of(pivot);
  cert.base_type = g;

  cert.slack = -rel.coefficients[0];
  for (std::size_t i = 1; i <= lead_count; ++i)
    cert.slack += rel.coefficients[i];

  // (a) pivot shape and primitivity of the all-ones brick relation
  cert.condition_a = true;
  if (g <= 2) {
    cert.condition_a = false;
    fail("pivot type must exceed 2");
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      const bool want_nonzero = i < g - 1 || i == m - 1;
      if (pivot.brick_is_zero(i) == want_nonzero) {
        cert.condition_a = false;
        fail("pivot bricks not in canonical positions");
        break;
      }
    }
  }
  if (cert.condition_a) {
    std::vector<IntVector> bricks;
    IntVector sum(pivot.brick_len());
    for (std::size_t i = 0; i < g - 1; ++i) {
      bricks.push_back(pivot.brick(i));
      sum = vec_add(sum, bricks.back());
    }
    bricks.push_back(pivot.brick(m - 1));
    sum = vec_add(sum, bricks.back());
    if (!is_zero(sum)) {
      cert.condition_a = false;
      fail("pivot bricks do not sum to zero");
    } else if (rational_kernel_dimension(IntMatrix::from_columns(bricks)) != 1) {
      cert.condition_a = false;
      fail("all-ones brick relation is not primitive");
    }
  }

  // (b) last brick of each lead element
  cert.condition_b = true;
  if (cert.condition_a) {
    const IntVector neg_last = negated(pivot.brick(m - 1));
    for (std::size_t i = 1; i <= lead_count; ++i)
      if (rel.elements[i].brick(m - 1) != neg_last) {
        cert.condition_b = false;
        fail("lead element " + std::to_string(i) +
             " does not end in the negated final pivot brick");
        break;
      }
  }

  // (c) coprimality of base_type - 1 and the slack
  cert.condition_c =
      g > 2 && gcd_all({Int(g - 1), cert.slack}) == 1;
  if (!cert.condition_c) fail("gcd(base_type - 1, slack) != 1");

  return cert;
}

/// One lifting step. Turns a primitive relation on kernel elements of the
/// M-fold into one on the (M+1)-fold:
///   - the pivot and the lead elements have their last brick moved into the
///     new final slot,
///   - the remaining elements get a zero brick appended,
///   - base_type - 1 new elements are built from the pivot bricks; their
///     global sign depends on the sign of the slack.
/// New coefficients: pivot (g-1)h0 + (g-2)s, others scaled by g-1, new
/// elements |s|. The output is re-verified, never trusted.
inline PrimitiveRelation lift(const PrimitiveRelation& rel,
                              const LiftCertificate& cert) {
  LiftCertificate fresh = check_lift_conditions(rel, cert.lead_count);
  if (!fresh.all())
    throw ConditionsFailed("lift conditions not met: " + fresh.diagnostics);
  if (fresh.slack != cert.slack || fresh.base_type != cert.base_type)
    throw ConditionsFailed("certificate does not match the relation");

  const std::size_t k = rel.size() - 1;
  const std::size_t g = fresh.base_type;
  const std::size_t l = fresh.lead_count;
  const Int& s = fresh.slack;
  const BrickVector& pivot = rel.elements[0];
  const std::size_t m = pivot.copies();

  PrimitiveRelation out;
  out.base_matrix = rel.base_matrix;
  out.copies = rel.copies + 1;
  out.elements.reserve(k + g);
  out.coefficients.reserve(k + g);

  for (std::size_t i = 0; i <= l; ++i)
    out.elements.push_back(move_last_brick(rel.elements[i]));
  for (std::size_t i = l + 1; i <= k; ++i)
    out.elements.push_back(append_zero_brick(rel.elements[i]));

  const Int sign = s >= 0 ? -1 : 1;
  for (std::size_t j = 1; j <= g - 1; ++j) {
    BrickVector y(m + 1, pivot.brick_len());
    for (std::size_t p = 1; p <= g - 1; ++p)
      if (p != j) y.set_brick(p - 1, vec_scaled(pivot.brick(p - 1), sign));
    y.set_brick(m - 1, vec_scaled(pivot.brick(m - 1), sign));
    y.set_brick(m, vec_scaled(pivot.brick(j - 1), sign));
    out.elements.push_back(std::move(y));
  }

  out.coefficients.push_back(Int(g - 1) * rel.coefficients[0] + Int(g - 2) * s);
  for (std::size_t i = 1; i <= k; ++i)
    out.coefficients.push_back(Int(g - 1) * rel.coefficients[i]);
  for (std::size_t j = 1; j <= g - 1; ++j)
    out.coefficients.push_back(abs(s));

  if (out.coefficients[0] <= 0)
    throw InternalError("lifted pivot coefficient not positive");
  Int expected = Int(g - 1) * rel.coefficient_sum_abs();
  if (s >= 0)
    expected += Int(2 * g - 3) * s;
  else
    expected -= s;
  if (out.coefficient_sum_abs() != expected)
    throw InternalError("lifted coefficient sum does not match the case formula");
  if (!verify_primitive(out).algebraic_all_passed())
    throw InternalError("lifted relation failed primitivity re-verification");
  return out;
}

/// Switch point for repeated lifting: from at_copies on, use a different
/// lead count (the slack is re-derived from the current coefficients).
struct ChainSwitch {
  std::size_t at_copies = 0;
  std::size_t lead_count = 0;
};

/// Repeated lifting up to target_copies. Certificates are re-derived after
/// every step; a failed condition aborts with the step reported.
inline PrimitiveRelation lift_chain(const PrimitiveRelation& rel,
                                    std::size_t lead_count,
                                    std::size_t target_copies,
                                    std::optional<ChainSwitch> sw = {}) {
  if (target_copies < rel.copies)
    throw InvalidSpec("target copy count below the relation's");
  if (sw && (sw->at_copies > target_copies || sw->at_copies < rel.copies))
    throw InvalidSpec("switch point outside the chain range");

  PrimitiveRelation current = rel;
  while (current.copies < target_copies) {
    const std::size_t step_lead =
        sw && current.copies >= sw->at_copies ? sw->lead_count : lead_count;
    LiftCertificate cert = check_lift_conditions(current, step_lead);
    if (!cert.all())
      throw ConditionsFailed("chain stopped at " +
                             std::to_string(current.copies) +
                             " copies: " + cert.diagnostics);
    current = lift(current, cert);
  }
  return current;
}

/// Base relation from a maximum-support circuit of the matrix whose columns
/// are G(A): the pivot stacks the weighted circuit members as bricks, and
/// the relation consists of its cyclic brick shifts with unit coefficients.
/// Suitable for lifting with lead_count 0 (slack -1).
inline PrimitiveRelation cyclic_base_relation(const IntMatrix& a,
                                              const Budget& budget = {}) {
  GraverBasis ga = graver_basis(a, budget);
  if (ga.empty())
    throw NoCircuitOfSupport3("Graver basis is empty, no circuits available");
  CircuitSet cs = circuits(IntMatrix::from_columns(ga.elements), budget);
  const std::size_t g = cs.max_support();
  if (g < 3)
    throw NoCircuitOfSupport3("largest circuit support is below 3");

  const IntVector* chosen = nullptr;
  for (const IntVector& c : cs.elements) {
    std::size_t supp = 0;
    for (const Int& e : c)
      if (e != 0) ++supp;
    if (supp == g) {
      chosen = &c;
      break;  // elements are in canonical order, first hit is deterministic
    }
  }

  std::vector<IntVector> bricks;
  for (std::size_t j = 0; j < chosen->size(); ++j)
    if ((*chosen)[j] != 0)
      bricks.push_back(vec_scaled(ga.elements[j], (*chosen)[j]));
  const BrickVector pivot = BrickVector::from_bricks(bricks);

  PrimitiveRelation out;
  out.base_matrix = a;
  out.copies = g;
  for (std::size_t t = 0; t < g; ++t) {
    BrickVector x(g, pivot.brick_len());
    for (std::size_t i = 0; i < g; ++i) x.set_brick(i, pivot.brick((i + t) % g));
    out.elements.push_back(std::move(x));
    out.coefficients.push_back(1);
  }
  if (!verify_primitive(out).algebraic_all_passed())
    throw InternalError("cyclic shift relation failed primitivity check");
  return out;
}

/// The shipped 7-element base relation on kernel elements of the 4-fold of
/// (1 1 1), with coefficient sum 27. Lifting it with lead_count 2 doubles
/// the bound per step.
inline PrimitiveRelation base_relation_3x4() {
  auto table = [](std::vector<IntVector> rows) {
    return BrickVector::from_bricks(rows);
  };
  PrimitiveRelation rel;
  rel.base_matrix = IntMatrix::from_rows({{1, 1, 1}});
  rel.copies = 4;
  rel.elements = {
      table({{0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {-1, 1, 0}}),
      table({{0, 0, 0}, {0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}),
      table({{-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {1, -1, 0}}),
      table({{-1, 1, 0}, {0, 0, 0}, {0, -1, 1}, {1, 0, -1}}),
      table({{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {-1, 0, 1}}),
      table({{0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 0, 1}}),
      table({{1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 1, -1}}),
  };
  rel.coefficients = {1, 3, 5, 2, 3, 6, 7};
  return rel;
}

// ---------------------------------------------------------------------------
// Lower-bound formulas. All evaluated with exact rationals; a nonintegral
// final value signals misuse and raises InternalError.

enum class Formula {
  recursive,      // closed form of the repeated lift
  circuit_base,   // recursion from the cyclic circuit relation
  table3,         // 3-column tables, shipped base relation
  berstein_onn,   // previously known exponential bound for 3-column tables
  mixed,          // lift with lead count 2 up to a switch point, then 0
  relation_sum,   // coefficient sum of one verified relation
};

/// Identifier used in serialized form and on the command line.
inline std::string formula_id(Formula f) {
  switch (f) {
    case Formula::recursive: return "cor1";
    case Formula::circuit_base: return "cor2";
    case Formula::table3: return "cor3";
    case Formula::berstein_onn: return "berstein_onn";
    case Formula::mixed: return "mixed";
    case Formula::relation_sum: return "lemma2";
  }
  return "?";
}

inline std::optional<Formula> formula_from_id(const std::string& id) {
  for (Formula f : {Formula::recursive, Formula::circuit_base, Formula::table3,
                    Formula::berstein_onn, Formula::mixed, Formula::relation_sum})
    if (formula_id(f) == id) return f;
  return std::nullopt;
}

struct BoundResult {
  Formula formula;
  std::vector<std::pair<std::string, Int>> params;
  Int value;
  std::size_t valid_from = 0;  // smallest copy count the formula covers
};

namespace detail {

inline Int require_integral(const Rat& v, const char* what) {
  if (boost::multiprecision::denominator(v) != 1)
    throw InternalError(std::string(what) + ": nonintegral value");
  return boost::multiprecision::numerator(v);
}

inline Int int_pow(const Int& base, std::size_t e) {
  Int r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Closed form of the repeated lift: starting from a relation with
/// coefficient sum coeff_sum, pivot type base_type and slack at start_copies,
/// the bound certified at `copies` copies.
inline BoundResult bound_recursive(const Int& coeff_sum, std::size_t base_type,
                                   const Int& slack, std::size_t start_copies,
                                   std::size_t copies) {
  if (base_type <= 2) throw InvalidSpec("base type must exceed 2");
  if (copies < start_copies)
    throw InvalidSpec("copy count below the starting point");
  const Int growth = detail::int_pow(Int(base_type - 1), copies - start_copies);
  // Both branches share the shape growth*(sum + t) - t; only t differs.
  Int t_num;
  if (slack >= 0)
    t_num = Int(2 * base_type - 3) * slack;
  else
    t_num = -slack;
  const Rat term(t_num, Int(base_type - 2));
  const Rat value = Rat(growth) * (Rat(coeff_sum) + term) - term;
  BoundResult r;
  r.formula = Formula::recursive;
  r.params = {{"sum_h", coeff_sum},
              {"g", Int(base_type)},
              {"s", slack},
              {"M0", Int(start_copies)},
              {"M", Int(copies)}};
  r.value = detail::require_integral(value, "recursive bound");
  r.valid_from = start_copies;
  return r;
}

/// Bound grown from the cyclic circuit relation of a matrix whose largest
/// circuit support is base_type.
inline BoundResult bound_circuit_base(std::size_t base_type, std::size_t copies) {
  if (base_type < 3) throw InvalidSpec("base type must be at least 3");
  if (copies < base_type)
    throw InvalidSpec("copy count below the base relation's");
  const Int g1 = Int(base_type - 1);
  const Rat value =
      Rat(g1, Int(base_type - 2)) *
          Rat(detail::int_pow(g1, copies - (base_type - 1))) -
      Rat(1, Int(base_type - 2));
  BoundResult r;
  r.formula = Formula::circuit_base;
  r.params = {{"g", Int(base_type)}, {"M", Int(copies)}};
  r.value = detail::require_integral(value, "circuit base bound");
  r.valid_from = base_type;
  return r;
}

/// 24 * 2^(M-3) - 21, the bound the shipped 3-column base relation yields.
inline BoundResult bound_table3(std::size_t copies) {
  if (copies < 4) throw InvalidSpec("table bound needs at least 4 copies");
  BoundResult r;
  r.formula = Formula::table3;
  r.params = {{"M", Int(copies)}};
  r.value = Int(24) * detail::int_pow(2, copies - 3) - 21;
  r.valid_from = 4;
  return r;
}

/// 17 * 2^(M-3) - 7, the previously known bound for 3-column tables.
inline BoundResult bound_berstein_onn(std::size_t copies) {
  if (copies < 4) throw InvalidSpec("bound needs at least 4 copies");
  BoundResult r;
  r.formula = Formula::berstein_onn;
  r.params = {{"M", Int(copies)}};
  r.value = Int(17) * detail::int_pow(2, copies - 3) - 7;
  r.valid_from = 4;
  return r;
}

/// Bound for the strategy that lifts with lead count 2 up to switch_copies
/// and with lead count 0 afterwards:
/// (28 - 224/2^M0) * 2^(M-3) - (2^(M0-1) - 7).
inline BoundResult bound_mixed(std::size_t switch_copies, std::size_t copies) {
  if (switch_copies < 6) throw InvalidSpec("switch point must be at least 6");
  if (copies < switch_copies)
    throw InvalidSpec("copy count below the switch point");
  const Rat lead = Rat(28) - Rat(Int(224), detail::int_pow(2, switch_copies));
  const Rat value = lead * Rat(detail::int_pow(2, copies - 3)) -
                    Rat(Int(detail::int_pow(2, switch_copies - 1) - 7));
  BoundResult r;
  r.formula = Formula::mixed;
  r.params = {{"M0", Int(switch_copies)}, {"M", Int(copies)}};
  r.value = detail::require_integral(value, "mixed bound");
  r.valid_from = switch_copies;
  return r;
}

/// The bound certified by a verified relation, wrapped as a BoundResult.
inline BoundResult bound_from_relation(const PrimitiveRelation& rel) {
  BoundResult r;
  r.formula = Formula::relation_sum;
  r.params = {{"M", Int(rel.copies)}};
  r.value = rel.coefficient_sum_abs();
  r.valid_from = rel.copies;
  return r;
}

/// One row of the lead-count survey: the certificate outcome for a given
/// lead count and, when it passes, the coefficient sum one lift would give.
struct LiftOption {
  std::size_t lead_count = 0;
  Int slack;
  bool usable = false;
  Int lifted_sum;                            // meaningful when usable
  std::vector<std::size_t> element_order;    // only set in subset mode
};

namespace detail {

inline Int predicted_lift_sum(const PrimitiveRelation& rel,
                              const LiftCertificate& cert) {
  Int sum = Int(cert.base_type - 1) * rel.coefficient_sum_abs();
  if (cert.slack >= 0)
    sum += Int(2 * cert.base_type - 3) * cert.slack;
  else
    sum -= cert.slack;
  return sum;
}

}  // namespace detail

/// Surveys every lead count on the relation as ordered. With
/// include_subsets (experimental: implied by element symmetry but applied
/// only on request) it also tries every eligible subset moved to the front.
inline std::vector<LiftOption> enumerate_lift_options(
    const PrimitiveRelation& rel, bool include_subsets = false) {
  std::vector<LiftOption> out;
  for (std::size_t l = 0; l + 1 <= rel.size(); ++l) {
    LiftCertificate cert = check_lift_conditions(rel, l);
    LiftOption opt;
    opt.lead_count = l;
    opt.slack = cert.slack;
    opt.usable = cert.all();
    if (opt.usable) opt.lifted_sum = detail::predicted_lift_sum(rel, cert);
    out.push_back(std::move(opt));
  }
  if (!include_subsets || rel.size() < 2) return out;

  // Eligible followers: last brick equal to the negated final pivot brick.
  const BrickVector& pivot = rel.elements[0];
  const IntVector neg_last = negated(pivot.brick(pivot.copies() - 1));
  std::vector<std::size_t> eligible;
  for (std::size_t i = 1; i < rel.size(); ++i)
    if (rel.elements[i].brick(pivot.copies() - 1) == neg_last)
      eligible.push_back(i);

  std::vector<std::size_t> pick;
  auto emit = [&]() {
    std::vector<std::size_t> order{0};
    order.insert(order.end(), pick.begin(), pick.end());
    for (std::size_t i = 1; i < rel.size(); ++i)
      if (std::find(pick.begin(), pick.end(), i) == pick.end())
        order.push_back(i);
    PrimitiveRelation reordered;
    reordered.base_matrix = rel.base_matrix;
    reordered.copies = rel.copies;
    for (std::size_t i : order) {
      reordered.elements.push_back(rel.elements[i]);
      reordered.coefficients.push_back(rel.coefficients[i]);
    }
    LiftCertificate cert = check_lift_conditions(reordered, pick.size());
    LiftOption opt;
    opt.lead_count = pick.size();
    opt.slack = cert.slack;
    opt.usable = cert.all();
    if (opt.usable)
      opt.lifted_sum = detail::predicted_lift_sum(reordered, cert);
    opt.element_order = order;
    out.push_back(std::move(opt));
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) emit();
    for (std::size_t i = from; i < eligible.size(); ++i) {
      pick.push_back(eligible[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace graverlift
