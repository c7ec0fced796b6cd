// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "subdivreg/laurent.hpp"
#include "subdivreg/rational.hpp"

namespace subdivreg {

/// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  int n() const { return n_; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  Rational trace() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Rational> entries_;
};

// Transition matrix of dimension 2p-1 with entry(k,l) = b_{k-2l},
// k,l = -p+1..p-1. Throws DegenerateBSplineError for p = 0.
RationalMatrix build_matrix_large(const SymmetricMask& b);

// Folded transition matrix of dimension p: column 0 is b_k, column l >= 1
// is b_{|k-2l|} + b_{k+2l} (entries beyond the mask are zero).
RationalMatrix build_matrix_folded(const SymmetricMask& b);

// Transpose of the large matrix: the decimated-coefficient recursion.
RationalMatrix build_matrix_transpose(const SymmetricMask& b);

// Exact characteristic polynomial det(A - lambda I), coefficients ascending
// in lambda (leading coefficient (-1)^n). Faddeev-LeVerrier over rationals.
std::vector<Rational> char_poly(const RationalMatrix& a);

}  // namespace subdivreg
