// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "subdivreg/errors.hpp"
#include "subdivreg/matrix.hpp"
#include "test_helpers.hpp"

using namespace subdivreg;

namespace {

SymmetricMask quintic_mask() {
  return SymmetricMask({Rational(38, 8), Rational(-18, 8), Rational(3, 8)});
}

SymmetricMask eight_point_mask() {
  return SymmetricMask({Rational(208, 16), Rational(-131, 16), Rational(40, 16),
                        Rational(-5, 16)});
}

std::vector<Rational> rats(std::vector<long> nums, long den = 1) {
  std::vector<Rational> out;
  for (long n : nums) {
    Rational r(n, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("large transition matrix layouts") {
  const auto m = build_matrix_large(quintic_mask());
  CHECK(m == RationalMatrix::from_rows({rats({-18, -18, 0}, 8),
                                        rats({3, 38, 3}, 8),
                                        rats({0, -18, -18}, 8)}));

  // p = 1 collapses to the single central entry.
  const auto tiny =
      build_matrix_large(SymmetricMask({Rational(2), Rational(-1, 2)}));
  CHECK(tiny.n() == 1);
  CHECK(tiny.at(0, 0) == 2);

  // Generic p = 2 layout.
  const SymmetricMask generic({Rational(5), Rational(7), Rational(11)});
  const auto g = build_matrix_large(generic);
  CHECK(g == RationalMatrix::from_rows({rats({7, 7, 0}),
                                        rats({11, 5, 11}),
                                        rats({0, 7, 7})}));

  CHECK_THROWS_AS(build_matrix_large(SymmetricMask({Rational(1)})),
                  DegenerateBSplineError);
}

TEST_CASE("folded transition matrix layouts") {
  CHECK(build_matrix_folded(quintic_mask()) ==
        RationalMatrix::from_rows({rats({38, 6}, 8), rats({-18, -18}, 8)}));

  const SymmetricMask generic({Rational(5), Rational(7), Rational(11)});
  CHECK(build_matrix_folded(generic) ==
        RationalMatrix::from_rows({rats({5, 22}), rats({7, 7})}));

  // Row k = 2 of the p = 4 layout: (b2, b0+b4, b2, b4).
  const SymmetricMask p4({Rational(1), Rational(2), Rational(3), Rational(4),
                          Rational(5)});
  const auto f = build_matrix_folded(p4);
  CHECK(f.at(2, 0) == 3);
  CHECK(f.at(2, 1) == 1 + 5);
  CHECK(f.at(2, 2) == 3);
  CHECK(f.at(2, 3) == 5);

  CHECK_THROWS_AS(build_matrix_folded(SymmetricMask({Rational(1)})),
                  DegenerateBSplineError);
}

TEST_CASE("transpose matrix is the entrywise transpose") {
  for (int p = 1; p <= 5; ++p) {
    const SymmetricMask b = testing::random_mask(p);
    const auto m = build_matrix_large(b);
    const auto n = build_matrix_transpose(b);
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j) CHECK(n.at(i, j) == m.at(j, i));
    // Shared characteristic polynomial.
    CHECK(char_poly(m) == char_poly(n));
  }
}

TEST_CASE("char_poly: frozen worked cases") {
  // Folded quintic 2x2: lambda^2 - (5/2) lambda - 9.
  CHECK(char_poly(build_matrix_folded(quintic_mask())) ==
        rats({-18, -5, 2}, 2));

  // Folded eight-point 3x3: -lambda^3 + 7 lambda^2 + (217/4) lambda - 125.
  CHECK(char_poly(build_matrix_folded(eight_point_mask())) ==
        rats({-500, 217, 28, -4}, 4));

  // Identity 2x2: lambda^2 - 2 lambda + 1.
  RationalMatrix eye(2);
  eye.at(0, 0) = 1;
  eye.at(1, 1) = 1;
  CHECK(char_poly(eye) == rats({1, -2, 1}));
}

TEST_CASE("char_poly evaluates to det(A - lambda I) at sample points") {
  // Cross-check coefficients against direct 2x2 determinants.
  for (int rep = 0; rep < 20; ++rep) {
    RationalMatrix a(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a.at(i, j) = testing::small_rational();
    const auto cp = char_poly(a);
    for (const Rational lam : {Rational(0), Rational(1), Rational(-2)}) {
      const Rational det = (a.at(0, 0) - lam) * (a.at(1, 1) - lam) -
                           a.at(0, 1) * a.at(1, 0);
      Rational acc = 0;
      for (auto it = cp.rbegin(); it != cp.rend(); ++it) acc = acc * lam + *it;
      CHECK(acc == det);
    }
  }
}
