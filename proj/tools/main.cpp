// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: analyze arbitrary masks, generate the
// pseudo-spline regularity tables, compare members, and run subdivision
// simulations. Exit codes: 0 ok, 1 input error, 2 method inapplicable,
// 3 enclosure failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "subdivreg/cli.hpp"
#include "subdivreg/errors.hpp"

namespace {

using namespace subdivreg;
using cli::Json;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotSymmetricError*>(&e)) return cli::kMethodInapplicable;
  if (dynamic_cast<const OddCenterError*>(&e)) return cli::kMethodInapplicable;
  if (dynamic_cast<const EnclosureTooWideError*>(&e))
    return cli::kEnclosureFailure;
  return cli::kInputError;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write to " + path);
  out << text;
}

cli::InputSpec resolve_analyze_input(const std::string& family,
                                     const std::string& mask, int offset,
                                     const std::string& mask_file) {
  const int given = (!family.empty()) + (!mask.empty()) + (!mask_file.empty());
  if (given != 1)
    throw ParseError(
        "give exactly one of --family, --mask (with --offset), --mask-file");
  if (!family.empty()) return cli::spec_from_family(family);
  if (!mask.empty()) return cli::spec_from_mask(mask, offset);
  return cli::spec_from_mask_file(mask_file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "subdivreg: certified Holder regularity of symmetric subdivision "
      "schemes via exact transition-matrix spectral radii"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "factor a symbol and certify its regularity exponent");
  std::string family, mask, mask_file, out_path;
  int offset = 0;
  bool as_json = false;
  int holds_derived = -1;
  analyze_cmd->add_option("--family", family, "family member spec kind:m,l");
  analyze_cmd->add_option("--mask", mask,
                          "comma-separated rational coefficients");
  analyze_cmd->add_option("--offset", offset,
                          "exponent of the first mask coefficient");
  analyze_cmd->add_option("--mask-file", mask_file,
                          "JSON file with coeffs[] and offset");
  analyze_cmd->add_flag("--json", as_json, "emit the structured document");
  analyze_cmd->add_option("--holds-derived", holds_derived,
                          "override the derived exponent r (re-absorbs "
                          "(1+z)/2 factors into the difference mask)");
  analyze_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

  // table
  auto* table_cmd = app.add_subcommand(
      "table", "regularity table for a pseudo-spline family");
  std::string table_kind;
  int m_max = 8;
  bool table_csv = false, table_json = false;
  table_cmd->add_option("kind", table_kind, "primal or dual")->required();
  table_cmd->add_option("m_max", m_max, "largest m (default 8)");
  table_cmd->add_option("--mmax", m_max, "largest m");
  table_cmd->add_flag("--csv", table_csv, "CSV output");
  table_cmd->add_flag("--json", table_json, "JSON output");
  table_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

  // compare
  auto* compare_cmd = app.add_subcommand(
      "compare", "pointwise comparison constant and regularity-gap bound");
  std::string base_spec, target_spec;
  bool compare_json = false;
  compare_cmd->add_option("base", base_spec, "baseline member kind:m,l")
      ->required();
  compare_cmd->add_option("target", target_spec, "target member kind:m,l")
      ->required();
  compare_cmd->add_flag("--json", compare_json, "emit the structured document");

  // simulate
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "exact central-coefficient growth and empirical rho");
  std::string sim_spec, samples_path;
  cli::SimulateOptions sim_opt;
  bool sim_json = false;
  int samples_levels = 6;
  simulate_cmd->add_option("spec", sim_spec, "family member kind:m,l")
      ->required();
  simulate_cmd->add_option("--jmax", sim_opt.jmax, "levels of the recursion");
  simulate_cmd->add_flag("--check-lemma2", sim_opt.check_lemma2,
                         "exhaustive exact max-at-center check (capped at "
                         "level 12)");
  simulate_cmd->add_option("--samples-csv", samples_path,
                           "write cardinal samples as CSV to this file");
  simulate_cmd->add_option("--samples-levels", samples_levels,
                           "refinement level for --samples-csv (default 6)");
  simulate_cmd->add_flag("--json", sim_json, "emit the structured document");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const auto spec = resolve_analyze_input(family, mask, offset, mask_file);
      std::optional<int> r_override;
      if (analyze_cmd->count("--holds-derived") > 0) r_override = holds_derived;
      const Json doc = cli::analyze_document(spec, r_override);
      emit(as_json ? doc.dump(2) + "\n" : cli::render_analyze_text(doc),
           out_path);
      return doc["report"]["gamma"].is_null() ? cli::kMethodInapplicable
                                              : cli::kOk;
    }
    if (*table_cmd) {
      const Json doc = cli::table_document(
          table_kind == "primal"
              ? FamilyKind::Primal
              : (table_kind == "dual"
                     ? FamilyKind::Dual
                     : throw ParseError("kind must be primal or dual")),
          m_max);
      std::string text = table_json ? doc.dump(2) + "\n"
                         : table_csv ? cli::render_table_csv(doc)
                                     : cli::render_table_text(doc);
      emit(text, out_path);
      return cli::kOk;
    }
    if (*compare_cmd) {
      const auto base = cli::spec_from_family(base_spec);
      const auto target = cli::spec_from_family(target_spec);
      const Json doc = cli::compare_document(*base.family, *target.family);
      emit(compare_json ? doc.dump(2) + "\n" : cli::render_compare_text(doc),
           "");
      return cli::kOk;
    }
    if (*simulate_cmd) {
      const auto spec = cli::spec_from_family(sim_spec);
      const Json doc = cli::simulate_document(spec, sim_opt);
      std::cout << (sim_json ? doc.dump(2) + "\n"
                             : cli::render_simulate_text(doc));
      if (!samples_path.empty())
        emit(cli::samples_csv(spec, samples_levels), samples_path);
      return doc.contains("rho_algebraic") ? cli::kOk
                                           : cli::kMethodInapplicable;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return cli::kOk;
}
