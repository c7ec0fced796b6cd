// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdivreg/laurent.hpp"
#include "subdivreg/rational.hpp"

namespace subdivreg {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. Primary use is the s-domain image of a symmetric mask under
/// s = sin^2(xi/2); it doubles as the generic exact polynomial wherever one
/// is needed (Sturm chains, characteristic polynomials).
class SPoly {
 public:
  SPoly() = default;  // zero
  explicit SPoly(std::vector<Rational> coeffs);

  static SPoly constant(const Rational& c);
  // Coefficient of s^1 is 1: the polynomial "s".
  static SPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  SPoly operator+(const SPoly& rhs) const;
  SPoly operator-(const SPoly& rhs) const;
  SPoly operator*(const SPoly& rhs) const;
  SPoly operator-() const;
  SPoly scaled(const Rational& c) const;
  SPoly derivative() const;

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  // Divides by the positive content so coefficients are coprime integers;
  // sign pattern unchanged. Keeps Sturm chains small.
  SPoly primitive() const;

  // Exact deflation by (s - root); requires eval(root) == 0.
  SPoly deflate(const Rational& root) const;

  bool operator==(const SPoly& rhs) const = default;

  std::string to_string(const std::string& var = "s") const;

 private:
  std::vector<Rational> coeffs_;
};

// Exact quotient/remainder by a nonzero divisor.
struct SPolyDivMod {
  SPoly quotient;
  SPoly remainder;
};
SPolyDivMod divmod(const SPoly& dividend, const SPoly& divisor);

// Primitive-form gcd of two polynomials (exact Euclid). gcd(0,0) = 0.
SPoly poly_gcd(SPoly a, SPoly b);

// q divided by gcd(q, q'): same distinct roots, all simple.
SPoly squarefree_part(const SPoly& q);

enum class Positivity { StrictlyPositive, NonnegativeWithZero, Indefinite };

/// Exact verdict for a polynomial on [0,1].
///
/// The witness is present exactly when the kind is not StrictlyPositive:
/// for NonnegativeWithZero it isolates a zero, for Indefinite it isolates a
/// sign-change root, or degenerates to a point where the value is negative
/// when the polynomial is negative on all of [0,1].
struct PositivityVerdict {
  Positivity kind = Positivity::Indefinite;
  std::optional<RatInterval> witness;
};

std::string to_string(Positivity kind);

/// Exact s-domain image of the mask: the unique polynomial q of degree p
/// with q(sin^2(xi/2)) = b_0 + 2 sum_k b_k cos(k xi). Built through the
/// Chebyshev recurrence over rationals.
SPoly to_s_poly(const SymmetricMask& b);

/// Number of distinct real roots in the half-open interval (lo, hi].
/// Endpoint roots are handled by exact deflation, so no preconditions on
/// q(lo), q(hi) beyond q != 0.
int sturm_root_count(const SPoly& q, const Rational& lo, const Rational& hi);

/// Disjoint rational intervals, one per distinct root of q in [lo, hi],
/// each of width <= max_width (exact roots give point intervals).
std::vector<RatInterval> isolate_roots(const SPoly& q, const Rational& lo,
                                       const Rational& hi,
                                       const Rational& max_width);

/// Exact positivity decision on [0,1] via Sturm sequences; never samples
/// floating point. Throws ZeroPolynomialError for q = 0.
PositivityVerdict positivity(const SPoly& q);

}  // namespace subdivreg
