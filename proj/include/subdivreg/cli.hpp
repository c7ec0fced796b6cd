// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "subdivreg/comparisons.hpp"
#include "subdivreg/families.hpp"
#include "subdivreg/regularity.hpp"

namespace subdivreg::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Stable exit-code contract for scripting.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kMethodInapplicable = 2,
  kEnclosureFailure = 3,
};

/// A resolved analysis input: the symbol plus the canonical description it
/// was built from (recorded in provenance).
struct InputSpec {
  LaurentPoly symbol;
  std::optional<FamilyId> family;
  std::string canonical;
};

// "primal:3,2" / "dual:4,1"
InputSpec spec_from_family(const std::string& text);
// Comma-separated rational literals plus the exponent of the first one.
InputSpec spec_from_mask(const std::string& coeff_list, int offset);
// JSON file with fields "coeffs" (array of rational strings) and "offset".
InputSpec spec_from_mask_file(const std::string& path);

std::uint64_t fnv1a_hash(const std::string& text);

// Everything that may differ between equivalent inputs lives here, so the
// rest of a document is bitwise-stable.
Json make_provenance(const Json& input_description);

Json analyze_document(const InputSpec& in,
                      std::optional<int> r_override = std::nullopt);
std::string render_analyze_text(const Json& doc);

Json table_document(FamilyKind kind, int m_max);
std::string render_table_text(const Json& doc);
std::string render_table_csv(const Json& doc);

Json compare_document(const FamilyId& base, const FamilyId& target);
std::string render_compare_text(const Json& doc);

struct SimulateOptions {
  int jmax = 30;
  bool check_lemma2 = false;
  // Exhaustive exact array check; capped to keep the cost sane.
  int lemma2_level_cap = 12;
  int samples_levels = 0;  // > 0 writes cardinal samples
};

Json simulate_document(const InputSpec& in, const SimulateOptions& opt);
std::string render_simulate_text(const Json& doc);
// "x,value" rows of the level-`levels` refinement from the unit pulse.
std::string samples_csv(const InputSpec& in, int levels);

// Fixed five decimals, round-half-even, no locale.
std::string format_fixed5(double x);

}  // namespace subdivreg::cli
