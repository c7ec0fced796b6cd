// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdivreg/matrix.hpp"
#include "subdivreg/spoly.hpp"

namespace subdivreg {

/// Certified enclosure of a spectral radius. The true value lies in
/// [estimate - radius_bound, estimate + radius_bound]; `bounds` carries the
/// underlying exact rational interval. charpoly is det(A - lambda I) with
/// ascending coefficients (empty only on the p = 0 shortcut where no matrix
/// exists and rho = 1 exactly).
struct RhoEnclosure {
  double estimate = 0;
  double radius_bound = 0;
  std::vector<Rational> charpoly;
  RatInterval bounds{Rational(0), Rational(0)};
};

/// Locates all characteristic roots numerically, then certifies via exact
/// Newton disks on the square-free part of the characteristic polynomial.
/// Guarantees radius_bound <= 1e-10 * max(1, estimate) or throws
/// EnclosureTooWideError.
RhoEnclosure spectral_radius(const RationalMatrix& a);

struct GammaResult {
  double gamma = 0;
  bool integer_exponent_caveat = false;
};

/// gamma = r - log2(rho). Requires the certified rho to satisfy
/// rho >= 1/2 (OutOfTheoremRangeError) and rho < 2^r
/// (ReductionWindowExceededError). The caveat flags log2(rho) being an
/// integer within the enclosure, where membership holds only for exponents
/// strictly below gamma.
GammaResult regularity_from_rho(int r, const RhoEnclosure& rho);

struct RegularityReport {
  int r = 0;
  int p = 0;
  int one_plus_z_multiplicity = 0;
  std::vector<Rational> half_mask;
  SPoly b_polynomial;
  PositivityVerdict positivity;
  std::optional<RationalMatrix> folded;
  std::optional<RhoEnclosure> rho;
  std::optional<double> gamma;  // absent when the method is inapplicable
  bool optimal = false;
  bool integer_exponent_caveat = false;
  std::string notes;
};

/// Full pipeline: factor out (1+z), center the difference mask, certify
/// positivity, build the folded transition matrix, enclose its spectral
/// radius and convert to a regularity exponent. `r_override` re-absorbs
/// (1+z)/2 factors into the mask (must be <= multiplicity - 1).
///
/// A report without `gamma` signals that the method is inapplicable for
/// this input (indefinite B, rho out of range); notes say why.
RegularityReport analyze(const LaurentPoly& a,
                         std::optional<int> r_override = std::nullopt);

}  // namespace subdivreg
