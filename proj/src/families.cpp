// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/families.hpp"

#include <stdexcept>

namespace subdivreg {

void validate(const FamilyId& id) {
  if (id.m < 1 || id.l < 0 || id.l > id.m - 1)
    throw std::invalid_argument("family parameters out of range: need m >= 1 "
                                "and 0 <= l <= m-1, got m=" +
                                std::to_string(id.m) +
                                " l=" + std::to_string(id.l));
}

std::string to_string(const FamilyId& id) {
  return std::string(id.kind == FamilyKind::Primal ? "primal" : "dual") + ":" +
         std::to_string(id.m) + "," + std::to_string(id.l);
}

LaurentPoly sigma() {
  return LaurentPoly(-1, {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
}

LaurentPoly delta() {
  return LaurentPoly(-1, {Rational(-1, 4), Rational(1, 2), Rational(-1, 4)});
}

namespace {

// sum_{k=0..l} binom(base+k, k) delta^k with rational base.
LaurentPoly smoothing_blend(const Rational& base, int l) {
  const LaurentPoly d = delta();
  LaurentPoly acc;
  LaurentPoly dk = LaurentPoly::constant(Rational(1));
  for (int k = 0; k <= l; ++k) {
    acc = acc + dk.scaled(binom_rising(base, static_cast<unsigned>(k)));
    if (k < l) dk = dk * d;
  }
  return acc;
}

}  // namespace

LaurentPoly primal_symbol(int m, int l) {
  validate({FamilyKind::Primal, m, l});
  const LaurentPoly blend = smoothing_blend(Rational(m - 1), l);
  return (sigma().pow(static_cast<unsigned>(m)) * blend).scaled(Rational(2));
}

LaurentPoly dual_symbol(int m, int l) {
  validate({FamilyKind::Dual, m, l});
  const LaurentPoly blend = smoothing_blend(Rational(2 * m - 1, 2), l);
  const LaurentPoly half_shift = LaurentPoly::one_plus_z().shifted(-1);
  return half_shift * sigma().pow(static_cast<unsigned>(m)) * blend;
}

LaurentPoly family_symbol(const FamilyId& id) {
  return id.kind == FamilyKind::Primal ? primal_symbol(id.m, id.l)
                                       : dual_symbol(id.m, id.l);
}

SPoly b_spoly(const FamilyId& id) {
  validate(id);
  const Rational base = id.kind == FamilyKind::Primal
                            ? Rational(id.m - 1)
                            : Rational(2 * id.m - 1, 2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(id.l) + 1);
  for (int k = 0; k <= id.l; ++k)
    coeffs[static_cast<std::size_t>(k)] =
        binom_rising(base, static_cast<unsigned>(k));
  return SPoly(std::move(coeffs));
}

}  // namespace subdivreg
