// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/laurent.hpp"

#include <sstream>

#include "subdivreg/errors.hpp"

namespace subdivreg {

namespace {

// GMP assumes canonical operands; enforce lowest terms on entry.
void canonicalize_all(std::vector<Rational>& c) {
  for (auto& x : c) x.canonicalize();
}

void trim(int& low, std::vector<Rational>& c) {
  std::size_t first = 0;
  while (first < c.size() && sign(c[first]) == 0) ++first;
  if (first == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  std::size_t last = c.size() - 1;
  while (sign(c[last]) == 0) --last;
  if (first > 0 || last + 1 < c.size())
    c = std::vector<Rational>(c.begin() + first, c.begin() + last + 1);
  low += static_cast<int>(first);
}

}  // namespace

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  canonicalize_all(coeffs_);
  trim(low_, coeffs_);
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
  return LaurentPoly(0, {c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::one_plus_z() {
  return LaurentPoly(0, {Rational(1), Rational(1)});
}

Rational LaurentPoly::coeff(int k) const {
  if (is_zero() || k < low() || k > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k - low_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const int lo = std::min(low(), rhs.low());
  const int hi = std::max(high(), rhs.high());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (int k = low(); k <= high(); ++k) out[k - lo] += coeff(k);
  for (int k = rhs.low(); k <= rhs.high(); ++k) out[k - lo] += rhs.coeff(k);
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return LaurentPoly(low_, std::move(out));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return LaurentPoly();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return LaurentPoly(low_ + rhs.low_, std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sign(c) == 0) return LaurentPoly();
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return LaurentPoly(low_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return LaurentPoly();
  return LaurentPoly(low_ + k, coeffs_);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

LaurentPoly LaurentPoly::upsample() const {
  if (is_zero()) return LaurentPoly();
  std::vector<Rational> out(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return LaurentPoly(2 * low_, std::move(out));
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (sign(x) == 0) {
    if (low_ < 0)
      throw EvalDomainError("evaluation at z = 0 with negative exponents");
    return coeff(0);
  }
  // Horner over the stored run, then the z^low factor.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  int e = low_;
  Rational base = (e < 0) ? Rational(1) / x : x;
  if (e < 0) e = -e;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = low(); k <= high(); ++k) {
    const Rational c = coeff(k);
    if (sign(c) == 0) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1 || k == 0) os << format_rational(a);
    if (k != 0) {
      if (a != 1) os << "*";
      os << "z";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

SymmetricMask::SymmetricMask(std::vector<Rational> half)
    : half_(std::move(half)) {
  if (half_.empty()) throw ZeroPolynomialError("empty symmetric mask");
  canonicalize_all(half_);
  if (half_.size() > 1 && sign(half_.back()) == 0)
    throw std::invalid_argument("symmetric mask half must end nonzero");
}

Rational SymmetricMask::coeff(int k) const {
  const std::size_t a = static_cast<std::size_t>(k < 0 ? -k : k);
  if (a >= half_.size()) return Rational(0);
  return half_[a];
}

LaurentPoly SymmetricMask::full() const {
  const int w = p();
  std::vector<Rational> c(static_cast<std::size_t>(2 * w + 1));
  for (int k = -w; k <= w; ++k) c[k + w] = coeff(k);
  return LaurentPoly(-w, std::move(c));
}

OnePlusZFactorization extract_one_plus_z(const LaurentPoly& p) {
  if (p.is_zero())
    throw ZeroPolynomialError("extract_one_plus_z: zero polynomial");
  OnePlusZFactorization out;
  out.quotient = p;
  const Rational minus_one(-1);
  while (sign(out.quotient.eval(minus_one)) == 0) {
    // Synthetic division by (1+z), low exponent unchanged.
    const auto& c = out.quotient.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;  // quotient coefficient being propagated
    for (std::size_t i = 0; i < q.size(); ++i) {
      carry = c[i] - carry;
      q[i] = carry;
    }
    out.quotient = LaurentPoly(out.quotient.low(), std::move(q));
    ++out.multiplicity;
  }
  return out;
}

SymmetricMask center_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("center_symmetric: zero polynomial");
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (c[i] != c[n - 1 - i])
      throw NotSymmetricError("mask has no palindromic center");
  if (n % 2 == 0)
    throw OddCenterError("palindromic center falls on a half-integer");
  const std::size_t mid = (n - 1) / 2;
  return SymmetricMask(
      std::vector<Rational>(c.begin() + mid, c.end()));
}

}  // namespace subdivreg
