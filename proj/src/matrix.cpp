// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/matrix.hpp"

#include <stdexcept>

#include "subdivreg/errors.hpp"

namespace subdivreg {

RationalMatrix::RationalMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                      Rational(0)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n(); ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != rows.size())
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.n(); ++j) {
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m.at(i, j).canonicalize();  // GMP assumes lowest terms
    }
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& aik = at(i, k);
      if (sign(aik) == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(
    const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(n_), Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

RationalMatrix build_matrix_large(const SymmetricMask& b) {
  const int p = b.p();
  if (p < 1)
    throw DegenerateBSplineError("transition matrix needs p >= 1 (p = 0 is "
                                 "the pure B-spline case with rho = 1)");
  RationalMatrix m(2 * p - 1);
  for (int k = -p + 1; k <= p - 1; ++k)
    for (int l = -p + 1; l <= p - 1; ++l)
      m.at(k + p - 1, l + p - 1) = b.coeff(k - 2 * l);
  return m;
}

RationalMatrix build_matrix_folded(const SymmetricMask& b) {
  const int p = b.p();
  if (p < 1)
    throw DegenerateBSplineError("transition matrix needs p >= 1 (p = 0 is "
                                 "the pure B-spline case with rho = 1)");
  RationalMatrix m(p);
  for (int k = 0; k < p; ++k) {
    m.at(k, 0) = b.coeff(k);
    for (int l = 1; l < p; ++l)
      m.at(k, l) = b.coeff(std::abs(k - 2 * l)) + b.coeff(k + 2 * l);
  }
  return m;
}

RationalMatrix build_matrix_transpose(const SymmetricMask& b) {
  return build_matrix_large(b).transpose();
}

std::vector<Rational> char_poly(const RationalMatrix& a) {
  const int n = a.n();
  // Faddeev-LeVerrier: exact coefficients of det(lambda I - A).
  std::vector<Rational> monic(static_cast<std::size_t>(n) + 1, Rational(0));
  monic[static_cast<std::size_t>(n)] = 1;
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;  // M_1 = I
  Rational c;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      m = a * m;
      for (int i = 0; i < n; ++i) m.at(i, i) += c;
    }
    c = -(a * m).trace() / k;
    monic[static_cast<std::size_t>(n - k)] = c;
  }
  // det(A - lambda I) = (-1)^n det(lambda I - A)
  if (n % 2 != 0)
    for (auto& x : monic) x = -x;
  return monic;
}

}  // namespace subdivreg
