// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace subdivreg {

// Exact arbitrary-precision rational, kept in lowest terms with positive
// denominator by GMP. No operation in the core pipeline ever rounds one.
using Rational = mpq_class;
using Integer = mpz_class;

// Closed interval with rational endpoints.
struct RatInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

// Accepts "n" or "n/d" with optional leading sign; d must be nonzero.
Rational parse_rational(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string format_rational(const Rational& x);

double to_double(const Rational& x);

// log2 of a positive rational, robust against double overflow.
double rational_log2(const Rational& x);

int sign(const Rational& x);

// 2^k for any integer k.
Rational pow2(int k);

// Nearest multiple of 2^-bits (ties toward +inf). Used to keep exact Newton
// iterates from growing unbounded digit counts.
Rational dyadic_round(const Rational& x, unsigned bits);

// Tight enclosure [lo, hi] with lo^2 <= x <= hi^2, width ~1e-30 relative.
RatInterval sqrt_enclosure(const Rational& x);

Integer binomial_int(unsigned n, unsigned k);

// binom(base + k, k) = prod_{n=1..k} (base + n)/n for rational base.
// Exact rising-factorial evaluation; covers half-integer upper arguments.
Rational binom_rising(const Rational& base, unsigned k);

}  // namespace subdivreg
