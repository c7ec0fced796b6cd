// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subdivreg/families.hpp"
#include "subdivreg/spoly.hpp"

namespace subdivreg {

/// Certified enclosure of sup_{s in [0,1]} num(s)/den(s). When the sup is
/// attained at an isolated rational candidate the interval collapses to an
/// exact value.
struct RatioEnclosure {
  RatInterval bounds{Rational(0), Rational(0)};
  double estimate = 0;
  double radius = 0;

  bool exact() const { return bounds.lo == bounds.hi; }
};

/// Sup of the ratio on [0,1]. Candidates come from exact Sturm isolation of
/// the critical points (roots of num' den - num den') plus the endpoints;
/// the upper bound is certified by bisecting c on the exact predicate
/// "c den - num >= 0 on [0,1]". Relative enclosure width <= 1e-9.
/// Requires den strictly positive on [0,1].
RatioEnclosure min_ratio_constant(const SPoly& num, const SPoly& den);

/// The additive regularity-gap bound r_tilde - r - log2(c); requires c >= 1.
double gap_bound(double c, int r, int r_tilde);

enum class TheoremStatement { T5i, T5ii, T5iii, T6i, T6ii, T6iii, T7a, T7b };

std::string to_string(TheoremStatement s);

/// Closed-form comparison constant C used in each monotonicity proof.
Rational theorem_constants(TheoremStatement which, int m, int l);

struct ComparisonResult {
  RatioEnclosure c_star;
  std::optional<Rational> c_theorem;  // set when the pair matches a pattern
  std::optional<TheoremStatement> pattern;
  double gap_bound = 0;  // computed from c_star, the sharper constant
  int r_base = 0;
  int r_target = 0;
};

/// Compares the target member's B-polynomial against the base member's:
/// c_star = sup B_target / B_base, gap = (r_target - r_base) - log2(c_star),
/// so gamma_target >= gamma_base + gap.
ComparisonResult compare_members(const FamilyId& base, const FamilyId& target);

/// Detects whether (base, target) instantiates one of the proved patterns.
std::optional<TheoremStatement> match_pattern(const FamilyId& base,
                                              const FamilyId& target);

/// Computed regularity exponents indexed by family member.
class GammaTable {
 public:
  void set(const FamilyId& id, double gamma);
  double get(const FamilyId& id) const;  // throws std::out_of_range
  bool has(const FamilyId& id) const;

 private:
  static std::tuple<int, int, int> key(const FamilyId& id);
  std::map<std::tuple<int, int, int>, double> gammas_;
};

// Fills the table for both families, 1 <= l < m <= m_max, via analyze().
GammaTable compute_gamma_table(int m_max);

struct TheoremCheck {
  TheoremStatement statement;
  int m = 0;
  int l = 0;
  double lower = 0;   // proved lower bound for `value`
  double value = 0;   // computed gamma being bracketed
  double upper = 0;   // proved upper bound
  bool pass = false;
};

struct TheoremVerification {
  std::vector<TheoremCheck> checks;
  bool all_pass = true;
};

/// Checks every two-sided monotonicity inequality on the computed table
/// with additive slack 1e-9; violations are report content, not errors.
TheoremVerification verify_theorems(int m_max, const GammaTable& table);

}  // namespace subdivreg
