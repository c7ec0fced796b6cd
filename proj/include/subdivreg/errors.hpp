// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace subdivreg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input-side failures (bad literals, mask files, family specs).
struct ParseError : Error { using Error::Error; };

// The symbol fails the normalization a(1) = 2, a(-1) = 0.
struct MaskNormalizationError : Error { using Error::Error; };

// Evaluation of z^k at z = 0 with k < 0.
struct EvalDomainError : Error { using Error::Error; };

// The difference mask has no palindromic center.
struct NotSymmetricError : Error { using Error::Error; };

// The palindromic center is a half-integer, so no integer-centered form exists.
struct OddCenterError : Error { using Error::Error; };

struct ZeroPolynomialError : Error { using Error::Error; };

// Exact division by (1+z)^s failed.
struct NotDivisibleError : Error { using Error::Error; };

// Matrix construction needs half-width p >= 1.
struct DegenerateBSplineError : Error { using Error::Error; };

// Spectral radius below 1/2: no regularity statement is made at this r.
struct OutOfTheoremRangeError : Error { using Error::Error; };

// rho >= 2^r: the reduction window is empty.
struct ReductionWindowExceededError : Error { using Error::Error; };

// Root certification could not reach the required enclosure width.
struct EnclosureTooWideError : Error { using Error::Error; };

}  // namespace subdivreg
