// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "subdivreg/laurent.hpp"
#include "subdivreg/rational.hpp"

namespace subdivreg {

/// Finitely supported data on the dyadic grid: values[k] is attached to the
/// point 2^-level (low + k). Everything outside the window is zero.
struct DyadicSequence {
  int level = 0;
  int low = 0;
  std::vector<Rational> values;

  static DyadicSequence delta(int level = 0);

  Rational at(int index) const;  // zero outside the window
  bool is_zero() const;

  // Leading/trailing zeros stripped (canonical form for comparisons).
  DyadicSequence trimmed() const;

  LaurentPoly to_poly() const;
  static DyadicSequence from_poly(const LaurentPoly& p, int level);

  bool operator==(const DyadicSequence&) const = default;
};

struct DividedDiffSequence {
  int order = 0;
  DyadicSequence inner;
};

/// Applies the upsample-convolve refinement `steps` times with exact index
/// bookkeeping; data is treated as zero outside the window.
DyadicSequence subdivide(const LaurentPoly& a, const DyadicSequence& f,
                         int steps);

/// 2^s a(z) / (1+z)^s, exact. Throws NotDivisibleError when (1+z)^s does
/// not divide a.
LaurentPoly derived_mask(const LaurentPoly& a, int s);

/// Order-s divided differences over the window interior: each pass maps
/// v_k -> (2^level / order)(v_k - v_{k-1}) for k = low+1..end, so the window
/// shrinks by s and low grows by s. Pad the input when the full supported
/// sequence is wanted. Throws std::invalid_argument when the window is too
/// short.
DividedDiffSequence divided_differences(const DyadicSequence& f, int s);

/// Exact coefficients of the j-fold mask product: iterate
/// g_{j+1}(z) = b(z) g_j(z^2) from the unit pulse. Support is contained in
/// [-(2^j - 1) p, (2^j - 1) p].
DyadicSequence b_iterates(const SymmetricMask& b, int j);

/// Central coefficients (b_{0,0}, ..., b_{jmax,0}) via the folded-matrix
/// vector recursion (constant work per step). p = 0 masks give all ones.
std::vector<Rational> central_sequence(const SymmetricMask& b, int jmax);

struct EmpiricalRho {
  double ratio = 0;     // consecutive central-coefficient ratio (tested)
  double jth_root = 0;  // j-th root of the last central coefficient
};

/// Numerical read-out of the central-coefficient growth rate.
EmpiricalRho empirical_rho(const SymmetricMask& b, int jmax);

/// Exhaustive exact check that max_k |b_{j,k}| is attained at k = 0 for
/// every j <= jmax.
bool max_center_check(const SymmetricMask& b, int jmax);

/// Refined data from the unit pulse; grid values of the level-j refinement
/// (exact values of the limit at grid points for interpolating schemes).
DyadicSequence cardinal_samples(const LaurentPoly& a, int levels);

}  // namespace subdivreg
