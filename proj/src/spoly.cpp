// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/spoly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "subdivreg/errors.hpp"

namespace subdivreg {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sign(c.back()) == 0) c.pop_back();
}

}  // namespace

SPoly::SPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& x : coeffs_) x.canonicalize();  // GMP assumes lowest terms
  trim(coeffs_);
}

SPoly SPoly::constant(const Rational& c) { return SPoly({c}); }

SPoly SPoly::variable() { return SPoly({Rational(0), Rational(1)}); }

Rational SPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

SPoly SPoly::operator+(const SPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return SPoly(std::move(out));
}

SPoly SPoly::operator-(const SPoly& rhs) const { return *this + (-rhs); }

SPoly SPoly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return SPoly(std::move(out));
}

SPoly SPoly::operator*(const SPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return SPoly();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return SPoly(std::move(out));
}

SPoly SPoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return SPoly(std::move(out));
}

SPoly SPoly::derivative() const {
  if (coeffs_.size() <= 1) return SPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return SPoly(std::move(out));
}

Rational SPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double SPoly::eval_double(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

SPoly SPoly::primitive() const {
  if (is_zero()) return SPoly();
  Integer den_lcm = 1;
  for (const auto& c : coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= content;
  return SPoly(std::move(out));
}

SPolyDivMod divmod(const SPoly& dividend, const SPoly& divisor) {
  if (divisor.is_zero())
    throw ZeroPolynomialError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {SPoly(), dividend};
  std::vector<Rational> quo(
      static_cast<std::size_t>(dividend.degree() - dd + 1), Rational(0));
  for (int k = dividend.degree(); k >= dd; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / divisor.leading();
    if (sign(f) == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= f * divisor.coeff(i);
  }
  return {SPoly(std::move(quo)), SPoly(std::move(rem))};
}

SPoly SPoly::deflate(const Rational& root) const {
  if (is_zero()) throw ZeroPolynomialError("deflate: zero polynomial");
  std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
  Rational carry = 0;
  for (int k = degree(); k >= 1; --k) {
    carry = coeff(k) + carry * root;
    out[static_cast<std::size_t>(k - 1)] = carry;
  }
  if (coeff(0) + carry * root != 0)
    throw std::invalid_argument("deflate: not a root");
  return SPoly(std::move(out));
}

std::string SPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational c = coeff(k);
    if (sign(c) == 0) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1 || k == 0) os << format_rational(a);
    if (k != 0) {
      if (a != 1) os << " ";
      os << var;
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

SPoly poly_gcd(SPoly a, SPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    SPoly r = divmod(a, b).remainder.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && sign(a.leading()) < 0) a = -a;
  return a;
}

SPoly squarefree_part(const SPoly& q) {
  if (q.is_zero()) return q;
  SPoly g = poly_gcd(q, q.derivative());
  if (g.degree() <= 0) return q;
  return divmod(q, g).quotient;
}

std::string to_string(Positivity kind) {
  switch (kind) {
    case Positivity::StrictlyPositive: return "strictly-positive";
    case Positivity::NonnegativeWithZero: return "nonnegative-with-zero";
    case Positivity::Indefinite: return "indefinite";
  }
  return "?";
}

SPoly to_s_poly(const SymmetricMask& b) {
  // cos(k xi) = T_k(1 - 2s) at s = sin^2(xi/2); expand over rationals.
  const int p = b.p();
  SPoly acc = SPoly::constant(b.coeff(0));
  if (p == 0) return acc;
  const SPoly x({Rational(1), Rational(-2)});  // 1 - 2s
  SPoly t_prev = SPoly::constant(Rational(1));
  SPoly t_cur = x;
  for (int k = 1; k <= p; ++k) {
    acc = acc + t_cur.scaled(2 * b.coeff(k));
    SPoly t_next = x.scaled(Rational(2)) * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return acc;
}

namespace {

std::vector<SPoly> sturm_chain(const SPoly& q) {
  std::vector<SPoly> chain;
  chain.push_back(q.primitive());
  SPoly d = q.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (chain.back().degree() > 0) {
    SPoly rem = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (rem.is_zero()) break;
    chain.push_back((-rem).primitive());
  }
  return chain;
}

int sign_variations(const std::vector<SPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int sturm_root_count(const SPoly& q, const Rational& lo, const Rational& hi) {
  if (q.is_zero()) throw ZeroPolynomialError("sturm_root_count: zero polynomial");
  if (lo >= hi) return 0;
  SPoly work = q;
  int at_hi = 0;
  // Endpoint roots are deflated exactly: hi counts once, lo is excluded.
  if (work.degree() > 0 && sign(work.eval(hi)) == 0) {
    at_hi = 1;
    while (work.degree() > 0 && sign(work.eval(hi)) == 0)
      work = work.deflate(hi);
  }
  while (work.degree() > 0 && sign(work.eval(lo)) == 0)
    work = work.deflate(lo);
  if (work.degree() <= 0) return at_hi;
  const auto chain = sturm_chain(work);
  return at_hi + sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RatInterval> isolate_roots(const SPoly& q, const Rational& lo,
                                       const Rational& hi,
                                       const Rational& max_width) {
  if (q.is_zero()) throw ZeroPolynomialError("isolate_roots: zero polynomial");
  const SPoly qsf = squarefree_part(q).primitive();
  std::vector<RatInterval> out;
  if (qsf.degree() <= 0) return out;
  if (sign(qsf.eval(lo)) == 0) out.push_back({lo, lo});

  // Finds w > 0 with no root of qsf in (a, a+w]; shrinks from an initial span.
  // (Explicit return types: gmpxx expression templates must not escape.)
  const auto clear_right_of = [&](const Rational& a,
                                  const Rational& b) -> Rational {
    Rational w = (b - a) / 2;
    while (sturm_root_count(qsf, a, a + w) > 0) w /= 2;
    return a + w;
  };
  // Finds w > 0 with (b-w, b] containing only the root at b.
  const auto clear_left_of = [&](const Rational& a,
                                 const Rational& b) -> Rational {
    Rational w = (b - a) / 2;
    while (sturm_root_count(qsf, b - w, b) > 1) w /= 2;
    return b - w;
  };

  struct Segment {
    Rational a, b;  // qsf(a) != 0; roots counted in (a, b]
    int count;
  };
  std::deque<Segment> work;
  {
    Rational a0 = lo;
    if (sign(qsf.eval(lo)) == 0) a0 = clear_right_of(lo, hi);
    const int n = sturm_root_count(qsf, a0, hi);
    if (n > 0) work.push_back({a0, hi, n});
  }
  while (!work.empty()) {
    Segment seg = work.front();
    work.pop_front();
    if (seg.count == 0) continue;
    if (sign(qsf.eval(seg.b)) == 0) {
      // The right endpoint is itself a root: isolate it as a point.
      if (seg.count == 1) {
        out.push_back({seg.b, seg.b});
        continue;
      }
      const Rational b2 = clear_left_of(seg.a, seg.b);
      out.push_back({seg.b, seg.b});
      work.push_back({seg.a, b2, seg.count - 1});
      continue;
    }
    if (seg.count == 1 && seg.b - seg.a <= max_width) {
      out.push_back({seg.a, seg.b});
      continue;
    }
    const Rational m = (seg.a + seg.b) / 2;
    if (sign(qsf.eval(m)) == 0) {
      out.push_back({m, m});
      const int left = sturm_root_count(qsf, seg.a, m) - 1;
      if (left > 0) work.push_back({seg.a, clear_left_of(seg.a, m), left});
      const int right = seg.count - 1 - left;
      if (right > 0) work.push_back({clear_right_of(m, seg.b), seg.b, right});
    } else {
      const int left = sturm_root_count(qsf, seg.a, m);
      if (left > 0) work.push_back({seg.a, m, left});
      if (seg.count - left > 0) work.push_back({m, seg.b, seg.count - left});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return out;
}

PositivityVerdict positivity(const SPoly& q) {
  if (q.is_zero()) throw ZeroPolynomialError("positivity: zero polynomial");
  const Rational zero(0), one(1);
  const auto roots = isolate_roots(q, zero, one, Rational(1, 1024));
  if (roots.empty()) {
    if (sign(q.eval(zero)) > 0) return {Positivity::StrictlyPositive, {}};
    // Negative throughout [0,1]: no root to isolate, certify with a point.
    return {Positivity::Indefinite, RatInterval{zero, zero}};
  }
  // Exact signs between consecutive root intervals and at root-free ends.
  std::vector<int> samples;
  std::vector<std::size_t> left_interval;  // root interval left of each sample
  if (sign(q.eval(zero)) != 0) {
    samples.push_back(sign(q.eval(zero)));
    left_interval.push_back(static_cast<std::size_t>(-1));
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational mid = (roots[i].hi + roots[i + 1].lo) / 2;
    samples.push_back(sign(q.eval(mid)));
    left_interval.push_back(i);
  }
  if (sign(q.eval(one)) != 0) {
    samples.push_back(sign(q.eval(one)));
    left_interval.push_back(roots.size() - 1);
  }
  const bool any_neg = std::any_of(samples.begin(), samples.end(),
                                   [](int s) { return s < 0; });
  const bool any_pos = std::any_of(samples.begin(), samples.end(),
                                   [](int s) { return s > 0; });
  if (!any_neg && any_pos)
    return {Positivity::NonnegativeWithZero, roots.front()};
  if (any_neg && any_pos) {
    // Witness the root interval where the sign flips.
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
      if (samples[i] != samples[i + 1])
        return {Positivity::Indefinite, roots[left_interval[i + 1]]};
  }
  // All samples negative (or none at all): not nonnegative anywhere useful.
  return {Positivity::Indefinite, roots.front()};
}

}  // namespace subdivreg
