// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "subdivreg/families.hpp"
#include "subdivreg/spoly.hpp"

using namespace subdivreg;

namespace {

LaurentPoly from_ints(int low, std::vector<long> nums, long den = 1) {
  std::vector<Rational> c;
  for (long n : nums) {
    Rational r(n, den);
    r.canonicalize();
    c.push_back(r);
  }
  return LaurentPoly(low, std::move(c));
}

}  // namespace

TEST_CASE("sigma and delta basics") {
  CHECK(sigma().eval(Rational(1)) == 1);
  CHECK(delta().eval(Rational(1)) == 0);
  CHECK(sigma().eval(Rational(-1)) == 0);
  CHECK(delta().eval(Rational(-1)) == 1);
  CHECK(sigma() + delta() == LaurentPoly::constant(Rational(1)));
}

TEST_CASE("primal symbols: worked members") {
  // (3,2) is the quintic interpolating scheme.
  CHECK(primal_symbol(3, 2) ==
        from_ints(-5, {3, 0, -25, 0, 150, 256, 150, 0, -25, 0, 3}, 256));
  // (2,0) is the cubic B-spline.
  CHECK(primal_symbol(2, 0) ==
        LaurentPoly::one_plus_z().pow(4).scaled(Rational(1, 8)).shifted(-2));
  // (2,1) is the 4-point interpolating scheme; oracle: expand 2 sigma^2 (1+2delta).
  const LaurentPoly oracle =
      (sigma() * sigma() *
       (LaurentPoly::constant(Rational(1)) + delta().scaled(Rational(2))))
          .scaled(Rational(2));
  CHECK(primal_symbol(2, 1) == oracle);
  CHECK(primal_symbol(2, 1) == from_ints(-3, {-1, 0, 9, 16, 9, 0, -1}, 16));
  CHECK_THROWS_AS(primal_symbol(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(primal_symbol(0, 0), std::invalid_argument);
}

TEST_CASE("dual symbols: worked members") {
  // (1,0) is the Chaikin / degree-2 B-spline scheme.
  const LaurentPoly chaikin = LaurentPoly::one_plus_z().shifted(-1) * sigma();
  CHECK(dual_symbol(1, 0) == chaikin);
  CHECK(dual_symbol(1, 0) == from_ints(-2, {1, 3, 3, 1}, 4));

  // (2,1): oracle expansion (1+z)^5 (-5 + 18z - 5z^2) / (128 z^4).
  const LaurentPoly expected =
      LaurentPoly::one_plus_z().pow(5) *
      from_ints(-4, {-5, 18, -5}, 128);
  CHECK(dual_symbol(2, 1) == expected);
  // Cross-checks that pin the expansion down.
  CHECK(dual_symbol(2, 1).eval(Rational(1)) == 2);
  CHECK(dual_symbol(2, 1).eval(Rational(-1)) == 0);

  CHECK(binom_rising(Rational(3, 2), 1) == Rational(5, 2));
}

TEST_CASE("b_spoly coefficients") {
  CHECK(b_spoly({FamilyKind::Primal, 3, 2}) ==
        SPoly({Rational(1), Rational(3), Rational(6)}));
  CHECK(b_spoly({FamilyKind::Primal, 5, 0}) == SPoly({Rational(1)}));
  CHECK(b_spoly({FamilyKind::Dual, 2, 1}) ==
        SPoly({Rational(1), Rational(5, 2)}));
}

TEST_CASE("normalization holds for every member") {
  for (int m = 1; m <= 8; ++m)
    for (int l = 0; l <= m - 1; ++l) {
      for (const FamilyKind kind : {FamilyKind::Primal, FamilyKind::Dual}) {
        const LaurentPoly a = family_symbol({kind, m, l});
        CHECK(a.eval(Rational(1)) == 2);
        CHECK(a.eval(Rational(-1)) == 0);
      }
    }
}

TEST_CASE("pipeline consistency: factor, center, transform") {
  for (int m = 1; m <= 8; ++m)
    for (int l = 0; l <= m - 1; ++l)
      for (const FamilyKind kind : {FamilyKind::Primal, FamilyKind::Dual}) {
        const FamilyId id{kind, m, l};
        const auto fact = extract_one_plus_z(family_symbol(id));
        const int expected_mult = kind == FamilyKind::Primal ? 2 * m : 2 * m + 1;
        CHECK(fact.multiplicity == expected_mult);
        const int r = fact.multiplicity - 1;
        const LaurentPoly b = fact.quotient.scaled(pow2(r));
        const SymmetricMask mask = center_symmetric(b);
        CHECK(mask.p() == l);
        CHECK(to_s_poly(mask) == b_spoly(id));
      }
}

TEST_CASE("interpolating members have the delta even subsequence") {
  for (int m = 2; m <= 8; ++m) {
    const LaurentPoly a = primal_symbol(m, m - 1);
    CHECK(a.coeff(0) == 1);
    for (int k = 2; k <= a.high(); k += 2) {
      CHECK(a.coeff(k) == 0);
      CHECK(a.coeff(-k) == 0);
    }
  }
}
