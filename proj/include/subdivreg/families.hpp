// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "subdivreg/laurent.hpp"
#include "subdivreg/spoly.hpp"

namespace subdivreg {

enum class FamilyKind { Primal, Dual };

/// Member of the pseudo-spline families. l = 0 gives the B-spline member,
/// l = m-1 the interpolating (primal) or dual interpolating member.
struct FamilyId {
  FamilyKind kind = FamilyKind::Primal;
  int m = 1;
  int l = 0;

  bool operator==(const FamilyId&) const = default;
};

// Throws std::invalid_argument unless m >= 1 and 0 <= l <= m-1.
void validate(const FamilyId& id);

std::string to_string(const FamilyId& id);

// (z^-1 + 2 + z)/4; evaluates to cos^2(xi/2) on the unit circle.
LaurentPoly sigma();

// -(z^-1 - 2 + z)/4 = 1 - sigma; evaluates to sin^2(xi/2).
LaurentPoly delta();

// 2 sigma^m sum_{k<=l} binom(m-1+k, k) delta^k.
LaurentPoly primal_symbol(int m, int l);

// (1+z)/z sigma^m sum_{k<=l} binom(m-1/2+k, k) delta^k; the half-integer
// binomials are exact rising-factorial rationals.
LaurentPoly dual_symbol(int m, int l);

LaurentPoly family_symbol(const FamilyId& id);

/// s-domain polynomial of the member's difference mask: coefficient of s^k
/// is binom(m-1+k, k) (primal) or binom(m-1/2+k, k) (dual), k = 0..l.
SPoly b_spoly(const FamilyId& id);

}  // namespace subdivreg
