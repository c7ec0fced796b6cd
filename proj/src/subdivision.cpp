// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/subdivision.hpp"

#include <cmath>
#include <stdexcept>

#include "subdivreg/errors.hpp"
#include "subdivreg/matrix.hpp"

namespace subdivreg {

DyadicSequence DyadicSequence::delta(int level) {
  return {level, 0, {Rational(1)}};
}

Rational DyadicSequence::at(int index) const {
  const int k = index - low;
  if (k < 0 || k >= static_cast<int>(values.size())) return Rational(0);
  return values[static_cast<std::size_t>(k)];
}

bool DyadicSequence::is_zero() const {
  for (const auto& v : values)
    if (sign(v) != 0) return false;
  return true;
}

DyadicSequence DyadicSequence::trimmed() const {
  std::size_t first = 0;
  while (first < values.size() && sign(values[first]) == 0) ++first;
  if (first == values.size()) return {level, 0, {}};
  std::size_t last = values.size() - 1;
  while (sign(values[last]) == 0) --last;
  return {level, low + static_cast<int>(first),
          std::vector<Rational>(values.begin() + static_cast<long>(first),
                                values.begin() + static_cast<long>(last) + 1)};
}

LaurentPoly DyadicSequence::to_poly() const { return LaurentPoly(low, values); }

DyadicSequence DyadicSequence::from_poly(const LaurentPoly& p, int level) {
  return {level, p.low(), p.coeffs()};
}

DyadicSequence subdivide(const LaurentPoly& a, const DyadicSequence& f,
                         int steps) {
  if (steps < 0) throw std::invalid_argument("subdivide: negative step count");
  DyadicSequence out = f;
  for (int s = 0; s < steps; ++s) {
    const LaurentPoly refined = a * out.to_poly().upsample();
    out = DyadicSequence::from_poly(refined, out.level + 1);
  }
  return out;
}

LaurentPoly derived_mask(const LaurentPoly& a, int s) {
  if (s < 0) throw std::invalid_argument("derived_mask: negative order");
  if (a.is_zero()) throw ZeroPolynomialError("derived_mask: zero symbol");
  const auto fact = extract_one_plus_z(a);
  if (fact.multiplicity < s)
    throw NotDivisibleError("(1+z)^" + std::to_string(s) +
                            " does not divide the symbol (multiplicity " +
                            std::to_string(fact.multiplicity) + ")");
  LaurentPoly out = fact.quotient.scaled(pow2(s));
  if (const int readd = fact.multiplicity - s; readd > 0)
    out = out * LaurentPoly::one_plus_z().pow(static_cast<unsigned>(readd));
  return out;
}

DividedDiffSequence divided_differences(const DyadicSequence& f, int s) {
  if (s < 0) throw std::invalid_argument("divided_differences: negative order");
  DyadicSequence cur = f;
  const Rational scale_base = pow2(f.level);
  for (int order = 1; order <= s; ++order) {
    if (cur.values.size() < 2)
      throw std::invalid_argument("divided_differences: sequence too short");
    const Rational scale = scale_base / order;
    std::vector<Rational> next(cur.values.size() - 1);
    for (std::size_t k = 1; k < cur.values.size(); ++k)
      next[k - 1] = scale * (cur.values[k] - cur.values[k - 1]);
    cur = {cur.level, cur.low + 1, std::move(next)};
  }
  return {s, std::move(cur)};
}

DyadicSequence b_iterates(const SymmetricMask& b, int j) {
  if (j < 0) throw std::invalid_argument("b_iterates: negative level");
  const LaurentPoly mask = b.full();
  LaurentPoly acc = LaurentPoly::constant(Rational(1));
  for (int i = 0; i < j; ++i) acc = mask * acc.upsample();
  return DyadicSequence::from_poly(acc, j);
}

std::vector<Rational> central_sequence(const SymmetricMask& b, int jmax) {
  if (jmax < 0) throw std::invalid_argument("central_sequence: negative jmax");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(jmax) + 1);
  out.push_back(Rational(1));
  if (b.p() == 0) {
    // Trivial mask: the iterates stay the unit pulse.
    for (int j = 1; j <= jmax; ++j) out.push_back(Rational(1));
    return out;
  }
  const RationalMatrix m = build_matrix_folded(b);
  std::vector<Rational> v(static_cast<std::size_t>(b.p()), Rational(0));
  v[0] = 1;
  for (int j = 1; j <= jmax; ++j) {
    v = m * v;
    out.push_back(v[0]);
  }
  return out;
}

EmpiricalRho empirical_rho(const SymmetricMask& b, int jmax) {
  if (jmax < 2) throw std::invalid_argument("empirical_rho: jmax must be >= 2");
  const auto central = central_sequence(b, jmax);
  const Rational& last = central[static_cast<std::size_t>(jmax)];
  const Rational& prev = central[static_cast<std::size_t>(jmax - 1)];
  if (sign(last) == 0 || sign(prev) == 0)
    throw Error("empirical_rho: zero central coefficient at level " +
                std::to_string(jmax));
  EmpiricalRho out;
  out.ratio = to_double(last / prev);
  out.jth_root = std::exp2(rational_log2(abs(last)) / jmax);
  return out;
}

bool max_center_check(const SymmetricMask& b, int jmax) {
  const LaurentPoly mask = b.full();
  LaurentPoly acc = LaurentPoly::constant(Rational(1));
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) acc = mask * acc.upsample();
    const Rational center = acc.coeff(0);
    for (const auto& c : acc.coeffs())
      if (abs(c) > center) return false;  // also fails when center < 0
  }
  return true;
}

DyadicSequence cardinal_samples(const LaurentPoly& a, int levels) {
  return subdivide(a, DyadicSequence::delta(0), levels);
}

}  // namespace subdivreg
