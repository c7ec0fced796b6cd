// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "subdivreg/errors.hpp"

namespace subdivreg {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw ParseError("not a rational literal: \"" + text + "\"");
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

double to_double(const Rational& x) { return x.get_d(); }

double rational_log2(const Rational& x) {
  if (sign(x) <= 0) throw std::domain_error("rational_log2: nonpositive input");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return (std::log2(mn) + static_cast<double>(en)) -
         (std::log2(md) + static_cast<double>(ed));
}

int sign(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

Rational pow2(int k) {
  Integer one = 1;
  if (k >= 0) return Rational(one << k, 1);
  return Rational(one, one << (-k));
}

Rational dyadic_round(const Rational& x, unsigned bits) {
  Integer scaled = x.get_num() << bits;
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(),
              x.get_den().get_mpz_t());
  if (2 * r >= x.get_den()) q += 1;
  Rational out(q, Integer(1) << bits);
  out.canonicalize();
  return out;
}

RatInterval sqrt_enclosure(const Rational& x) {
  if (sign(x) < 0) throw std::domain_error("sqrt_enclosure: negative input");
  if (sign(x) == 0) return {Rational(0), Rational(0)};
  Rational seed(std::sqrt(to_double(x)));
  if (sign(seed) <= 0) {
    // double underflow; bracket by halving
    seed = 1;
    while (seed * seed > x) seed /= 2;
  }
  // (s + x/s)/2 >= sqrt(x) for any s > 0; two steps give ~1e-30 relative.
  Rational hi = (seed + x / seed) / 2;
  hi = (hi + x / hi) / 2;
  Rational lo = x / hi;
  return {lo, hi};
}

Integer binomial_int(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational binom_rising(const Rational& base, unsigned k) {
  Rational out = 1;
  for (unsigned n = 1; n <= k; ++n) out *= (base + static_cast<long>(n)) / static_cast<long>(n);
  return out;
}

}  // namespace subdivreg
