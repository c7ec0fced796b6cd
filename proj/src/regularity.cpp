// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/regularity.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "subdivreg/errors.hpp"

namespace subdivreg {

namespace {

struct QComplex {
  Rational re, im;

  QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
  QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
  QComplex operator*(const QComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QComplex operator/(const QComplex& o) const {
    const Rational m = o.mag2();
    return {(re * o.re + im * o.im) / m, (im * o.re - re * o.im) / m};
  }
  Rational mag2() const { return re * re + im * im; }
  bool is_zero() const { return sign(re) == 0 && sign(im) == 0; }
  QComplex rounded(unsigned bits) const {
    return {dyadic_round(re, bits), dyadic_round(im, bits)};
  }
};

QComplex eval_qc(const SPoly& q, const QComplex& z) {
  QComplex acc{Rational(0), Rational(0)};
  for (int k = q.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re += q.coeff(k);
  }
  return acc;
}

// Simultaneous (Aberth-Ehrlich) iteration in binary64 for first estimates.
std::vector<std::complex<double>> aberth_roots(const SPoly& q) {
  using C = std::complex<double>;
  const int n = q.degree();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] =
      to_double(q.coeff(i) / q.leading());
  const auto eval = [&](C z, C& p, C& dp) {
    p = C(1, 0);
    dp = C(0, 0);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(k)];
    }
  };
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius = 1 + radius;
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double th = 2 * M_PI * (static_cast<double>(i) + 0.35) /
                          static_cast<double>(n) + 0.4;
    z[static_cast<std::size_t>(i)] = radius * C(std::cos(th), std::sin(th));
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      C p, dp;
      eval(z[static_cast<std::size_t>(i)], p, dp);
      if (std::abs(p) == 0) continue;
      if (std::abs(dp) == 0) dp = C(1e-30, 0);
      const C newton = p / dp;
      C s(0, 0);
      for (int j = 0; j < n; ++j)
        if (j != i) s += C(1, 0) / (z[static_cast<std::size_t>(i)] -
                                    z[static_cast<std::size_t>(j)]);
      C denom = C(1, 0) - newton * s;
      if (std::abs(denom) == 0) denom = C(1e-30, 0);
      const C w = newton / denom;
      z[static_cast<std::size_t>(i)] -= w;
      worst = std::max(worst,
                       std::abs(w) / (1 + std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// Exact certified enclosure of the maximum root modulus of a square-free
// polynomial. Each estimate gets a Newton disk of radius n|q/q'| (one root
// guaranteed inside); pairwise disjoint disks biject with the roots, which
// makes the max-modulus bound two-sided.
RatInterval certify_max_modulus(const SPoly& qsf_in) {
  const SPoly qsf = qsf_in.primitive();
  const int n = qsf.degree();
  const SPoly dq = qsf.derivative();
  const auto seeds = aberth_roots(qsf);

  for (int effort = 0; effort < 2; ++effort) {
    const int polish_steps = 3 + 3 * effort;
    const unsigned bits = 256u << effort;
    std::vector<QComplex> pts;
    std::vector<Rational> rad2;
    pts.reserve(static_cast<std::size_t>(n));
    for (const auto& s : seeds) {
      QComplex z{Rational(s.real()), Rational(s.imag())};
      bool exact = false;
      for (int step = 0; step < polish_steps && !exact; ++step) {
        // Snap-to-rational shortcut: exact eigenvalues collapse the disk.
        const QComplex snap = z.rounded(48);
        if (eval_qc(qsf, snap).is_zero()) {
          z = snap;
          exact = true;
          break;
        }
        const QComplex num = eval_qc(qsf, z);
        if (num.is_zero()) {
          exact = true;
          break;
        }
        const QComplex den = eval_qc(dq, z);
        if (den.is_zero()) {
          z.re += pow2(-40);
          continue;
        }
        z = (z - num / den).rounded(bits);
      }
      Rational r2(0);
      if (!exact) {
        const Rational num2 = eval_qc(qsf, z).mag2();
        const Rational den2 = eval_qc(dq, z).mag2();
        if (sign(den2) == 0)
          throw EnclosureTooWideError("derivative vanished at a root estimate");
        r2 = Rational(static_cast<long>(n) * static_cast<long>(n)) * num2 / den2;
      }
      pts.push_back(z);
      rad2.push_back(r2);
    }

    // (r_i + r_j)^2 <= 2(r_i^2 + r_j^2), so this comparison certifies
    // disjointness without taking square roots.
    bool disjoint = true;
    for (std::size_t i = 0; i < pts.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < pts.size() && disjoint; ++j)
        if ((pts[i] - pts[j]).mag2() <= 2 * (rad2[i] + rad2[j]))
          disjoint = false;
    if (!disjoint) continue;

    Rational lo(0), hi(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const RatInterval mod = sqrt_enclosure(pts[i].mag2());
      const Rational r_hi = sqrt_enclosure(rad2[i]).hi;
      Rational lower = mod.lo - r_hi;
      if (sign(lower) < 0) lower = 0;
      if (lower > lo) lo = lower;
      if (mod.hi + r_hi > hi) hi = mod.hi + r_hi;
    }
    return {lo, hi};
  }
  throw EnclosureTooWideError(
      "root disks overlap: could not certify the spectral radius enclosure");
}

void finalize(RhoEnclosure& out, const RatInterval& bounds) {
  out.bounds = bounds;
  out.estimate = to_double(bounds.mid());
  const Rational rad =
      bounds.width() / 2 + abs(Rational(out.estimate) - bounds.mid());
  constexpr double inf = std::numeric_limits<double>::infinity();
  double d = to_double(rad);
  d = std::nextafter(std::nextafter(d, inf), inf);
  out.radius_bound = (sign(rad) == 0) ? 0.0 : d;
}

}  // namespace

RhoEnclosure spectral_radius(const RationalMatrix& a) {
  RhoEnclosure out;
  out.charpoly = char_poly(a);
  std::vector<Rational> monic = out.charpoly;  // det(lambda I - A)
  if (a.n() % 2 != 0)
    for (auto& c : monic) c = -c;
  // Zero eigenvalues contribute nothing to the radius; strip them.
  std::size_t first_nonzero = 0;
  while (first_nonzero < monic.size() && sign(monic[first_nonzero]) == 0)
    ++first_nonzero;
  SPoly q(std::vector<Rational>(monic.begin() + static_cast<long>(first_nonzero),
                                monic.end()));
  if (q.degree() <= 0) {
    finalize(out, {Rational(0), Rational(0)});
    return out;
  }
  const SPoly qsf = squarefree_part(q);
  if (qsf.degree() == 1) {
    const Rational root = abs(-qsf.coeff(0) / qsf.coeff(1));
    finalize(out, {root, root});
    return out;
  }
  const RatInterval bounds = certify_max_modulus(qsf);
  finalize(out, bounds);
  const double limit = 1e-10 * std::max(1.0, out.estimate);
  if (out.radius_bound > limit)
    throw EnclosureTooWideError("spectral radius enclosure wider than 1e-10: "
                                "radius " + std::to_string(out.radius_bound));
  return out;
}

GammaResult regularity_from_rho(int r, const RhoEnclosure& rho) {
  const RatInterval& b = rho.bounds;
  if (b.hi < Rational(1, 2))
    throw OutOfTheoremRangeError(
        "rho < 1/2 is outside the certified range of the method; re-run with "
        "a smaller derived exponent (--holds-derived)");
  if (b.lo >= pow2(r))
    throw ReductionWindowExceededError(
        "rho >= 2^r: the reduction window is empty, no positive smoothness "
        "exponent can be certified at this r");
  GammaResult out;
  out.gamma = static_cast<double>(r) - std::log2(rho.estimate);
  const int k = static_cast<int>(std::lround(std::log2(rho.estimate)));
  for (int cand = k - 1; cand <= k + 1; ++cand)
    if (b.contains(pow2(cand))) out.integer_exponent_caveat = true;
  return out;
}

RegularityReport analyze(const LaurentPoly& a, std::optional<int> r_override) {
  if (a.is_zero()) throw MaskNormalizationError("the symbol is zero");
  const Rational at_one = a.eval(Rational(1));
  if (at_one != 2)
    throw MaskNormalizationError(
        "a(1) = " + format_rational(at_one) +
        " != 2; a convergent symbol needs a(1) = 2 and a(-1) = 0");
  const Rational at_minus_one = a.eval(Rational(-1));
  if (sign(at_minus_one) != 0)
    throw MaskNormalizationError(
        "a(-1) = " + format_rational(at_minus_one) +
        " != 0; a convergent symbol needs a(1) = 2 and a(-1) = 0");

  const auto fact = extract_one_plus_z(a);
  const int mu = fact.multiplicity;
  int r = mu - 1;
  if (r_override) {
    if (*r_override < 0 || *r_override > mu - 1)
      throw std::invalid_argument(
          "derived-exponent override must lie in [0, " + std::to_string(mu - 1) +
          "] (the factor (1+z) divides this symbol exactly " +
          std::to_string(mu) + " times)");
    r = *r_override;
  }
  LaurentPoly b_poly = fact.quotient.scaled(pow2(r));
  if (const int readd = (mu - 1) - r; readd > 0)
    b_poly = b_poly * LaurentPoly::one_plus_z().pow(static_cast<unsigned>(readd));

  RegularityReport rep;
  rep.r = r;
  rep.one_plus_z_multiplicity = mu;
  const SymmetricMask mask = center_symmetric(b_poly);
  rep.p = mask.p();
  rep.half_mask = mask.half();
  rep.b_polynomial = to_s_poly(mask);
  rep.positivity = positivity(rep.b_polynomial);

  if (rep.p == 0) {
    // Pure B-spline path: the difference mask is the unit pulse, rho = 1,
    // and the limit is the degree-r spline. No matrix is ever built.
    RhoEnclosure rho;
    rho.estimate = 1.0;
    rho.radius_bound = 0.0;
    rho.bounds = {Rational(1), Rational(1)};
    rep.rho = rho;
    rep.gamma = static_cast<double>(r);
    rep.integer_exponent_caveat = true;
    rep.optimal = rep.positivity.kind == Positivity::StrictlyPositive;
    rep.notes = "p = 0: B-spline member, smoothness attained up to (not at) "
                "the integer exponent";
    return rep;
  }

  if (rep.positivity.kind == Positivity::Indefinite) {
    rep.notes = "B changes sign on [0,1]: the single-matrix bound does not "
                "apply and no regularity exponent is produced";
    return rep;
  }

  rep.folded = build_matrix_folded(mask);
  rep.rho = spectral_radius(*rep.folded);
  try {
    const GammaResult g = regularity_from_rho(r, *rep.rho);
    rep.gamma = g.gamma;
    rep.integer_exponent_caveat = g.integer_exponent_caveat;
  } catch (const OutOfTheoremRangeError& e) {
    rep.notes = e.what();
    return rep;
  } catch (const ReductionWindowExceededError& e) {
    rep.notes = e.what();
    return rep;
  }
  rep.optimal = rep.positivity.kind == Positivity::StrictlyPositive;
  if (rep.positivity.kind == Positivity::NonnegativeWithZero)
    rep.notes = "B touches zero on [0,1]: gamma is a certified lower bound "
                "and optimality is not claimed";
  else if (rep.integer_exponent_caveat)
    rep.notes = "log2(rho) is an integer: membership holds for exponents "
                "strictly below gamma";
  return rep;
}

}  // namespace subdivreg
