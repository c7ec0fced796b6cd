// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/comparisons.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "subdivreg/errors.hpp"
#include "subdivreg/regularity.hpp"

namespace subdivreg {

namespace {

void finalize(RatioEnclosure& out) {
  out.estimate = to_double(out.bounds.mid());
  const Rational rad =
      out.bounds.width() / 2 + abs(Rational(out.estimate) - out.bounds.mid());
  constexpr double inf = std::numeric_limits<double>::infinity();
  double d = to_double(rad);
  d = std::nextafter(std::nextafter(d, inf), inf);
  out.radius = (sign(rad) == 0) ? 0.0 : d;
}

// c * den - num >= 0 on [0,1], decided exactly.
bool dominates(const Rational& c, const SPoly& num, const SPoly& den) {
  const SPoly diff = den.scaled(c) - num;
  if (diff.is_zero()) return true;
  return positivity(diff).kind != Positivity::Indefinite;
}

}  // namespace

RatioEnclosure min_ratio_constant(const SPoly& num, const SPoly& den) {
  if (positivity(den).kind != Positivity::StrictlyPositive)
    throw std::invalid_argument(
        "min_ratio_constant: denominator must be strictly positive on [0,1]");
  RatioEnclosure out;
  const Rational zero(0), one(1);

  const SPoly cross = num.derivative() * den - num * den.derivative();
  if (cross.is_zero()) {
    // Constant ratio.
    const Rational v = num.eval(zero) / den.eval(zero);
    out.bounds = {v, v};
    finalize(out);
    return out;
  }

  // Exact lower bound: best ratio value over endpoints and isolated
  // critical points.
  Rational best = num.eval(zero) / den.eval(zero);
  const Rational at_one = num.eval(one) / den.eval(one);
  if (at_one > best) best = at_one;
  for (const auto& box : isolate_roots(cross, zero, one, pow2(-60))) {
    const Rational v = num.eval(box.mid()) / den.eval(box.mid());
    if (v > best) best = v;
  }

  if (dominates(best, num, den)) {
    // The sup is attained at a candidate: exact.
    out.bounds = {best, best};
    finalize(out);
    return out;
  }

  // Bracket the sup from above, then bisect on the exact predicate.
  Rational step = abs(best) / pow2(40);
  if (sign(step) == 0) step = pow2(-40);
  Rational hi = best + step;
  while (!dominates(hi, num, den)) {
    step *= 2;
    hi = best + step;
  }
  Rational lo = best;
  const Rational tol =
      Rational(1, 1000000000) * std::max(Rational(1), Rational(abs(hi)));
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (dominates(mid, num, den))
      hi = mid;
    else
      lo = mid;
  }
  out.bounds = {lo, hi};
  finalize(out);
  return out;
}

double gap_bound(double c, int r, int r_tilde) {
  if (c < 1)
    throw std::invalid_argument("gap_bound: comparison constant must be >= 1");
  return static_cast<double>(r_tilde - r) - std::log2(c);
}

std::string to_string(TheoremStatement s) {
  switch (s) {
    case TheoremStatement::T5i: return "primal-l-step";
    case TheoremStatement::T5ii: return "primal-m-step";
    case TheoremStatement::T5iii: return "primal-diagonal-step";
    case TheoremStatement::T6i: return "dual-l-step";
    case TheoremStatement::T6ii: return "dual-m-step";
    case TheoremStatement::T6iii: return "dual-diagonal-step";
    case TheoremStatement::T7a: return "primal-to-dual";
    case TheoremStatement::T7b: return "dual-to-primal";
  }
  return "?";
}

Rational theorem_constants(TheoremStatement which, int m, int l) {
  if (m < 1) throw std::invalid_argument("theorem_constants: m must be >= 1");
  const auto need_positive_l = [&] {
    if (l < 1) throw std::invalid_argument("theorem_constants: l must be >= 1");
  };
  const auto need_nonneg_l = [&] {
    if (l < 0) throw std::invalid_argument("theorem_constants: l must be >= 0");
  };
  const auto frac = [](long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  switch (which) {
    case TheoremStatement::T5i:
      need_positive_l();
      return frac(m + l, l);
    case TheoremStatement::T5ii:
      need_nonneg_l();
      return frac(m + l, m);
    case TheoremStatement::T5iii:
      return frac(2 * (2 * m + 1), m + 1);
    case TheoremStatement::T6i:
      need_positive_l();
      return frac(2 * m + 2 * l + 1, 2 * l);
    case TheoremStatement::T6ii:
      need_nonneg_l();
      return frac(2 * m + 2 * l + 1, 2 * m + 1);
    case TheoremStatement::T6iii:
      return frac((4L * m + 1) * (4L * m + 3), 2L * m * (2 * m + 3));
    case TheoremStatement::T7a: {
      need_nonneg_l();
      Rational c(1);
      for (int n = 0; n < l; ++n) c *= frac(2 * (m + n) + 1, 2 * (m + n));
      return c;
    }
    case TheoremStatement::T7b: {
      need_nonneg_l();
      Rational c(1);
      for (int n = 0; n < l; ++n) c *= frac(2 * (m + 1 + n), 2 * (m + n) + 1);
      return c;
    }
  }
  throw std::invalid_argument("theorem_constants: unknown statement");
}

std::optional<TheoremStatement> match_pattern(const FamilyId& base,
                                              const FamilyId& target) {
  if (base.kind == target.kind) {
    const bool primal = base.kind == FamilyKind::Primal;
    if (target.m == base.m && target.l == base.l + 1)
      return primal ? TheoremStatement::T5i : TheoremStatement::T6i;
    if (target.m == base.m + 1 && base.l == base.m - 1 &&
        target.l == target.m - 1)
      return primal ? TheoremStatement::T5iii : TheoremStatement::T6iii;
    if (target.m == base.m + 1 && target.l == base.l)
      return primal ? TheoremStatement::T5ii : TheoremStatement::T6ii;
    return std::nullopt;
  }
  if (base.kind == FamilyKind::Primal && target.kind == FamilyKind::Dual &&
      target.m == base.m && target.l == base.l)
    return TheoremStatement::T7a;
  if (base.kind == FamilyKind::Dual && target.kind == FamilyKind::Primal &&
      target.m == base.m + 1 && target.l == base.l)
    return TheoremStatement::T7b;
  return std::nullopt;
}

namespace {

int derived_exponent(const FamilyId& id) {
  return id.kind == FamilyKind::Primal ? 2 * id.m - 1 : 2 * id.m;
}

// (m, l) arguments theorem_constants expects for each matched pattern.
std::pair<int, int> constant_args(TheoremStatement s, const FamilyId& base,
                                  const FamilyId& target) {
  switch (s) {
    case TheoremStatement::T5i:
    case TheoremStatement::T6i:
      return {target.m, target.l};
    case TheoremStatement::T5ii:
    case TheoremStatement::T6ii:
    case TheoremStatement::T5iii:
    case TheoremStatement::T6iii:
      return {base.m, base.l};
    case TheoremStatement::T7a:
    case TheoremStatement::T7b:
      return {base.m, base.l};
  }
  return {base.m, base.l};
}

}  // namespace

ComparisonResult compare_members(const FamilyId& base, const FamilyId& target) {
  validate(base);
  validate(target);
  ComparisonResult out;
  out.r_base = derived_exponent(base);
  out.r_target = derived_exponent(target);
  out.c_star = min_ratio_constant(b_spoly(target), b_spoly(base));
  out.pattern = match_pattern(base, target);
  if (out.pattern) {
    const auto [cm, cl] = constant_args(*out.pattern, base, target);
    out.c_theorem = theorem_constants(*out.pattern, cm, cl);
  }
  out.gap_bound = gap_bound(std::max(1.0, out.c_star.estimate), out.r_base,
                            out.r_target);
  return out;
}

void GammaTable::set(const FamilyId& id, double gamma) {
  gammas_[key(id)] = gamma;
}

double GammaTable::get(const FamilyId& id) const { return gammas_.at(key(id)); }

bool GammaTable::has(const FamilyId& id) const {
  return gammas_.count(key(id)) > 0;
}

std::tuple<int, int, int> GammaTable::key(const FamilyId& id) {
  return {id.kind == FamilyKind::Primal ? 0 : 1, id.m, id.l};
}

GammaTable compute_gamma_table(int m_max) {
  GammaTable table;
  for (const FamilyKind kind : {FamilyKind::Primal, FamilyKind::Dual})
    for (int m = 2; m <= m_max; ++m)
      for (int l = 1; l <= m - 1; ++l) {
        const FamilyId id{kind, m, l};
        const RegularityReport rep = analyze(family_symbol(id));
        table.set(id, rep.gamma.value());
      }
  return table;
}

TheoremVerification verify_theorems(int m_max, const GammaTable& table) {
  constexpr double kSlack = 1e-9;
  TheoremVerification out;
  const auto add = [&](TheoremStatement s, int m, int l, double lower,
                       double value, double upper) {
    const bool pass = lower - kSlack <= value && value <= upper + kSlack;
    out.checks.push_back({s, m, l, lower, value, upper, pass});
    if (!pass) out.all_pass = false;
  };
  const auto log2r = [](const Rational& c) { return rational_log2(c); };

  for (const FamilyKind kind : {FamilyKind::Primal, FamilyKind::Dual}) {
    const bool primal = kind == FamilyKind::Primal;
    // decreasing in l, with bounded drop
    for (int m = 3; m <= m_max; ++m)
      for (int l = 2; l <= m - 1; ++l) {
        const double base = table.get({kind, m, l - 1});
        const double value = table.get({kind, m, l});
        const auto s = primal ? TheoremStatement::T5i : TheoremStatement::T6i;
        add(s, m, l, base - log2r(theorem_constants(s, m, l)), value, base);
      }
    // increasing in m, with bounded rise
    for (int l = 1; l <= m_max - 2; ++l)
      for (int m = l + 1; m <= m_max - 1; ++m) {
        const double base = table.get({kind, m, l});
        const double value = table.get({kind, m + 1, l});
        const auto s = primal ? TheoremStatement::T5ii : TheoremStatement::T6ii;
        add(s, m, l, base + 2 - log2r(theorem_constants(s, m, l)), value,
            base + 2);
      }
    // diagonal growth
    for (int m = 2; m <= m_max - 1; ++m) {
      const double base = table.get({kind, m, m - 1});
      const double value = table.get({kind, m + 1, m});
      const auto s = primal ? TheoremStatement::T5iii : TheoremStatement::T6iii;
      add(s, m, m - 1, base + 2 - log2r(theorem_constants(s, m, m - 1)), value,
          base + 2);
    }
  }
  // primal vs dual chains
  for (int m = 2; m <= m_max; ++m)
    for (int l = 1; l <= m - 1; ++l) {
      const double primal_g = table.get({FamilyKind::Primal, m, l});
      const double dual_g = table.get({FamilyKind::Dual, m, l});
      add(TheoremStatement::T7a, m, l,
          primal_g + 1 - log2r(theorem_constants(TheoremStatement::T7a, m, l)),
          dual_g, primal_g + 1);
      if (m + 1 <= m_max) {
        const double next_primal = table.get({FamilyKind::Primal, m + 1, l});
        add(TheoremStatement::T7b, m, l,
            dual_g + 1 -
                log2r(theorem_constants(TheoremStatement::T7b, m, l)),
            next_primal, dual_g + 1);
      }
    }
  return out;
}

}  // namespace subdivreg
