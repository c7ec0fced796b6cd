// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "subdivreg/rational.hpp"

namespace subdivreg {

/// Laurent polynomial with exact rational coefficients.
///
/// Stored as the exponent of the first coefficient plus a dense coefficient
/// run. Always trimmed: the first and last stored coefficients are nonzero,
/// and the zero polynomial has an empty run. Equality is therefore
/// structural. Values are immutable after construction.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly one_plus_z();

  bool is_zero() const { return coeffs_.empty(); }
  // Exponent range [low, high] of the stored run; zero polynomial has an
  // empty range with low() = 0, high() = -1.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of z^k, zero outside the stored run.
  Rational coeff(int k) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by z^k
  LaurentPoly pow(unsigned e) const;

  // p(z^2): exponents doubled, zeros interleaved.
  LaurentPoly upsample() const;

  // Exact value sum p_k x^k. Throws EvalDomainError for x = 0 with low < 0.
  Rational eval(const Rational& x) const;

  bool operator==(const LaurentPoly& rhs) const = default;

  std::string to_string() const;

 private:
  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Palindromic mask b_k = b_{-k}, |k| <= p, stored as the half (b_0..b_p).
/// b_p != 0 unless p = 0.
class SymmetricMask {
 public:
  explicit SymmetricMask(std::vector<Rational> half);

  int p() const { return static_cast<int>(half_.size()) - 1; }
  const std::vector<Rational>& half() const { return half_; }

  // b_k for any k (mirrored, zero for |k| > p).
  Rational coeff(int k) const;

  // The full palindromic Laurent polynomial on [-p, p].
  LaurentPoly full() const;

  bool operator==(const SymmetricMask& rhs) const = default;

 private:
  std::vector<Rational> half_;
};

struct OnePlusZFactorization {
  int multiplicity = 0;
  LaurentPoly quotient;
};

/// Writes p = (1+z)^m * q with maximal m (so q(-1) != 0). Exact synthetic
/// division; requires p != 0.
OnePlusZFactorization extract_one_plus_z(const LaurentPoly& p);

/// Detects the palindromic center of p and returns the shifted half-mask.
/// Throws NotSymmetricError when no center exists and OddCenterError when
/// the center is a half-integer.
SymmetricMask center_symmetric(const LaurentPoly& p);

}  // namespace subdivreg
