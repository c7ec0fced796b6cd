// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "subdivreg/errors.hpp"
#include "subdivreg/families.hpp"
#include "subdivreg/regularity.hpp"

using namespace subdivreg;

namespace {

SymmetricMask quintic_mask() {
  return SymmetricMask({Rational(38, 8), Rational(-18, 8), Rational(3, 8)});
}

}  // namespace

TEST_CASE("spectral_radius: exact dominant root of the quintic folded matrix") {
  const auto rho = spectral_radius(build_matrix_folded(quintic_mask()));
  CHECK(rho.estimate == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(rho.radius_bound <= 1e-12);
  CHECK(rho.bounds.contains(Rational(9, 2)));
}

TEST_CASE("spectral_radius: trivial and small matrices") {
  RationalMatrix two(1);
  two.at(0, 0) = 2;
  const auto rho = spectral_radius(two);
  CHECK(rho.estimate == 2.0);
  CHECK(rho.radius_bound == 0.0);

  // Nilpotent: radius exactly zero.
  RationalMatrix nil(2);
  nil.at(0, 1) = 1;
  const auto zero = spectral_radius(nil);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.radius_bound == 0.0);

  // Repeated eigenvalues go through the square-free reduction.
  RationalMatrix eye(3);
  for (int i = 0; i < 3; ++i) eye.at(i, i) = Rational(3, 7);
  const auto rep = spectral_radius(eye);
  CHECK(rep.bounds.contains(Rational(3, 7)));
  CHECK(rep.radius_bound <= 1e-10);
}

TEST_CASE("spectral_radius: complex dominant pair is certified") {
  // Rotation-by-90-degrees scaled by 3/2: eigenvalues +-(3/2)i.
  RationalMatrix rot(2);
  rot.at(0, 1) = Rational(-3, 2);
  rot.at(1, 0) = Rational(3, 2);
  const auto rho = spectral_radius(rot);
  CHECK(rho.estimate == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(rho.bounds.contains(Rational(3, 2)));
}

TEST_CASE("eight-point member: rho and gamma against the worked values") {
  const auto fact = extract_one_plus_z(primal_symbol(4, 3));
  const SymmetricMask mask =
      center_symmetric(fact.quotient.scaled(pow2(fact.multiplicity - 1)));
  const auto rho = spectral_radius(build_matrix_folded(mask));
  CHECK(std::abs(rho.estimate - 10.91976) <= 1e-5);
  const auto g = regularity_from_rho(7, rho);
  CHECK(std::abs(g.gamma - 3.55113) <= 1e-5);
  CHECK(!g.integer_exponent_caveat);
}

TEST_CASE("regularity_from_rho: windows and the integer caveat") {
  RhoEnclosure one;
  one.estimate = 1.0;
  one.bounds = {Rational(1), Rational(1)};
  const auto g = regularity_from_rho(3, one);
  CHECK(g.gamma == 3.0);
  CHECK(g.integer_exponent_caveat);

  RhoEnclosure tiny;
  tiny.estimate = 0.25;
  tiny.bounds = {Rational(1, 4), Rational(1, 4)};
  CHECK_THROWS_AS(regularity_from_rho(3, tiny), OutOfTheoremRangeError);

  RhoEnclosure big;
  big.estimate = 8.0;
  big.bounds = {Rational(8), Rational(8)};
  CHECK_THROWS_AS(regularity_from_rho(3, big), ReductionWindowExceededError);

  // 9/2 is not a power of two: no caveat.
  RhoEnclosure nine_halves;
  nine_halves.estimate = 4.5;
  nine_halves.bounds = {Rational(9, 2), Rational(9, 2)};
  CHECK(!regularity_from_rho(5, nine_halves).integer_exponent_caveat);
}

TEST_CASE("analyze: quintic end-to-end") {
  const auto rep = analyze(primal_symbol(3, 2));
  CHECK(rep.r == 5);
  CHECK(rep.one_plus_z_multiplicity == 6);
  CHECK(rep.p == 2);
  CHECK(rep.half_mask == quintic_mask().half());
  CHECK(rep.positivity.kind == Positivity::StrictlyPositive);
  REQUIRE(rep.rho.has_value());
  CHECK(rep.rho->bounds.contains(Rational(9, 2)));
  REQUIRE(rep.gamma.has_value());
  CHECK(std::abs(*rep.gamma - (5 - std::log2(4.5))) <= 1e-15);
  CHECK(rep.optimal);
  CHECK(!rep.integer_exponent_caveat);
}

TEST_CASE("analyze: cubic B-spline short-circuits with rho = 1") {
  const auto rep = analyze(primal_symbol(2, 0));
  CHECK(rep.r == 3);
  CHECK(rep.p == 0);
  CHECK(!rep.folded.has_value());
  REQUIRE(rep.rho.has_value());
  CHECK(rep.rho->estimate == 1.0);
  CHECK(rep.gamma == 3.0);
  CHECK(rep.integer_exponent_caveat);
  CHECK(rep.optimal);
}

TEST_CASE("analyze: normalization failures name the broken condition") {
  const LaurentPoly hat(0, {Rational(1), Rational(2), Rational(1)});
  CHECK_THROWS_WITH_AS(analyze(hat), doctest::Contains("a(1) = 4"),
                       MaskNormalizationError);
  const LaurentPoly off(0, {Rational(1), Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(analyze(off), MaskNormalizationError);
}

TEST_CASE("analyze: asymmetric difference mask is rejected") {
  // (1+z)^2 (1 + 2z)/c normalized to a(1) = 2: c = 6.
  const LaurentPoly asym =
      LaurentPoly::one_plus_z().pow(2) *
      LaurentPoly(0, {Rational(1, 3), Rational(2, 3)});
  CHECK(asym.eval(Rational(1)) == 2);
  CHECK_THROWS_AS(analyze(asym), NotSymmetricError);
}

TEST_CASE("analyze is invariant under symbol shifts") {
  const LaurentPoly base = primal_symbol(3, 2);
  const auto ref = analyze(base);
  for (int k = -2; k <= 2; ++k) {
    const auto rep = analyze(base.shifted(k));
    CHECK(rep.r == ref.r);
    CHECK(rep.p == ref.p);
    CHECK(rep.half_mask == ref.half_mask);
    CHECK(rep.gamma == ref.gamma);
    CHECK(rep.optimal == ref.optimal);
    CHECK(rep.notes == ref.notes);
  }
}

TEST_CASE("analyze: derived-exponent override re-absorbs smoothing factors") {
  const LaurentPoly a = primal_symbol(3, 2);
  // Default r = 5; r = 3 re-absorbs (1+z)^2/4 into the difference mask,
  // whose transform picks up the factor (1 - s) and touches zero at s = 1.
  const auto rep = analyze(a, 3);
  CHECK(rep.r == 3);
  CHECK(rep.p == 3);
  CHECK(rep.positivity.kind == Positivity::NonnegativeWithZero);
  CHECK(!rep.optimal);
  REQUIRE(rep.gamma.has_value());
  // The bound can only get weaker than the maximal-extraction one.
  CHECK(*rep.gamma <= *analyze(a).gamma + 1e-12);
  CHECK_THROWS_AS(analyze(a, 6), std::invalid_argument);
  CHECK_THROWS_AS(analyze(a, -1), std::invalid_argument);
  // Odd re-absorption has no integer-centered symmetric form.
  CHECK_THROWS_AS(analyze(a, 4), OddCenterError);
}

TEST_CASE("analyze: indefinite B produces diagnostics without gamma") {
  // a = (1+z)^2/2 * (z^-1 + z)/2: the difference mask (1/2, 0, 1/2) has
  // transform 1 - 2s, which changes sign inside [0,1].
  const LaurentPoly b(-1, {Rational(1, 2), Rational(0), Rational(1, 2)});
  const LaurentPoly a =
      LaurentPoly::one_plus_z().pow(2).scaled(Rational(1, 2)) * b;
  CHECK(a.eval(Rational(1)) == 2);
  CHECK(a.eval(Rational(-1)) == 0);
  const auto rep = analyze(a);
  CHECK(rep.positivity.kind == Positivity::Indefinite);
  REQUIRE(rep.positivity.witness.has_value());
  CHECK(rep.positivity.witness->contains(Rational(1, 2)));
  CHECK(!rep.gamma.has_value());
  CHECK(!rep.rho.has_value());
  CHECK(!rep.optimal);
  CHECK(!rep.notes.empty());
}
