// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "subdivreg/cli.hpp"
#include "subdivreg/errors.hpp"

using namespace subdivreg;
using cli::Json;

namespace {

// Strips the fields allowed to differ between equivalent inputs.
Json without_provenance(Json doc) {
  doc.erase("provenance");
  return doc;
}

int run_cli(const std::string& args) {
  const char* bin = std::getenv("SUBDIVREG_BIN");
  if (!bin) return -1;
  const int status =
      std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("family spec grammar") {
  const auto spec = cli::spec_from_family("primal:3,2");
  REQUIRE(spec.family.has_value());
  CHECK(spec.family->m == 3);
  CHECK(spec.family->l == 2);
  CHECK_THROWS_AS(cli::spec_from_family("primal:3"), ParseError);
  CHECK_THROWS_AS(cli::spec_from_family("primal:3,3"), ParseError);
  CHECK_THROWS_AS(cli::spec_from_family("spline:3,2"), ParseError);
}

TEST_CASE("mask parsing") {
  const auto spec = cli::spec_from_mask("1/2,1,1/2", -1);
  CHECK(spec.symbol.eval(Rational(1)) == 2);
  CHECK_THROWS_AS(cli::spec_from_mask("", 0), ParseError);
  CHECK_THROWS_AS(cli::spec_from_mask("1,x", 0), ParseError);
  CHECK_THROWS_AS(cli::spec_from_mask("1/0", 0), ParseError);
}

TEST_CASE("family and explicit mask produce identical documents") {
  const auto by_family = cli::analyze_document(cli::spec_from_family("primal:3,2"));
  const auto by_mask = cli::analyze_document(cli::spec_from_mask(
      "3/256,0,-25/256,0,150/256,1,150/256,0,-25/256,0,3/256", -5));
  CHECK(without_provenance(by_family) == without_provenance(by_mask));
  CHECK(without_provenance(by_family).dump() ==
        without_provenance(by_mask).dump());
}

TEST_CASE("analyze document carries the worked quintic values") {
  const auto doc = cli::analyze_document(cli::spec_from_family("primal:3,2"));
  const auto& rep = doc["report"];
  CHECK(rep["r"] == 5);
  CHECK(rep["p"] == 2);
  CHECK(rep["half_mask"] == Json::array({"19/4", "-9/4", "3/8"}));
  CHECK(rep["positivity"]["kind"] == "strictly-positive");
  CHECK(rep["optimal"] == true);
  CHECK(std::abs(rep["gamma"].get<double>() - 2.830074998557688) <= 1e-12);
}

TEST_CASE("mask files round-trip through the parser") {
  const std::string path = "test_mask_file.json";
  {
    std::ofstream out(path);
    out << R"({"coeffs": ["3/256","0","-25/256","0","150/256","1","150/256","0","-25/256","0","3/256"], "offset": -5})";
  }
  const auto spec = cli::spec_from_mask_file(path);
  CHECK(spec.symbol == cli::spec_from_family("primal:3,2").symbol);
  std::remove(path.c_str());
  CHECK_THROWS_AS(cli::spec_from_mask_file("does_not_exist.json"), ParseError);
}

TEST_CASE("table document and renderings") {
  const auto doc = cli::table_document(FamilyKind::Primal, 4);
  CHECK(doc["entries"].size() == 6);
  CHECK(doc["entries"][0]["gamma_5dp"] == "2.00000");

  // Reparse-then-reserialize is the identity on the JSON form.
  const std::string dumped = doc.dump(2);
  CHECK(Json::parse(dumped).dump(2) == dumped);

  const std::string csv = cli::render_table_csv(doc);
  CHECK(csv.find("m,l=1,l=2,l=3") == 0);
  CHECK(csv.find("2,2.00000,,") != std::string::npos);

  const std::string text = cli::render_table_text(doc);
  CHECK(text.find("3.67807") != std::string::npos);

  CHECK_THROWS_AS(cli::table_document(FamilyKind::Primal, 1), ParseError);
}

TEST_CASE("compare document") {
  const auto doc = cli::compare_document({FamilyKind::Primal, 2, 1},
                                         {FamilyKind::Primal, 3, 2});
  CHECK(doc["c_star"]["exact"] == true);
  CHECK(doc["c_star"]["lo"] == "10/3");
  CHECK(doc["c_theorem"] == "10/3");
  CHECK(doc["pattern"] == "primal-diagonal-step");
  const double gap = doc["gap_bound"].get<double>();
  CHECK(std::abs(gap - (2 - std::log2(10.0 / 3.0))) <= 1e-9);
}

TEST_CASE("simulate document") {
  cli::SimulateOptions opt;
  opt.jmax = 20;
  opt.check_lemma2 = true;
  opt.lemma2_level_cap = 8;
  const auto doc =
      cli::simulate_document(cli::spec_from_family("primal:3,2"), opt);
  CHECK(doc["rho_algebraic"].get<double>() == 4.5);
  CHECK(std::abs(doc["ratio_final"].get<double>() - 4.5) <= 1e-3);
  CHECK(doc["lemma2"]["max_at_center"] == true);
  CHECK(doc["central"].size() == 21);
  CHECK(doc["central"][1] == "19/4");

  // The B-spline member runs the degenerate constant path.
  cli::SimulateOptions plain;
  plain.jmax = 5;
  const auto bs = cli::simulate_document(cli::spec_from_family("primal:2,0"), plain);
  CHECK(bs["rho_algebraic"].get<double>() == 1.0);
  CHECK(bs["ratio_final"].get<double>() == 1.0);
  for (const auto& c : bs["central"]) CHECK(c == "1");
}

TEST_CASE("samples csv shape") {
  const std::string csv =
      cli::samples_csv(cli::spec_from_family("primal:2,0"), 3);
  CHECK(csv.rfind("x,value\n", 0) == 0);
  CHECK(csv.find(",") != std::string::npos);
}

TEST_CASE("exit-code contract (spawns the real binary)") {
  if (!std::getenv("SUBDIVREG_BIN")) {
    MESSAGE("SUBDIVREG_BIN not set; skipping binary exit-code checks");
    return;
  }
  CHECK(run_cli("analyze --family primal:3,2") == cli::kOk);
  CHECK(run_cli("analyze --family primal:3,2 --json") == cli::kOk);
  // Normalization failure: input error.
  CHECK(run_cli("analyze --mask 1,2,1 --offset 0") == cli::kInputError);
  // Unparseable rational: input error.
  CHECK(run_cli("analyze --mask 1,zz --offset 0") == cli::kInputError);
  // Asymmetric difference mask: method inapplicable.
  CHECK(run_cli("analyze --mask 1/3,1,2/3 --offset -1") ==
        cli::kMethodInapplicable);
  // Sign-changing B: method inapplicable (report still renders).
  CHECK(run_cli("analyze --mask 1/4,1/2,1/2,1/2,1/4 --offset -1") ==
        cli::kMethodInapplicable);
  CHECK(run_cli("table dual 3") == cli::kOk);
  CHECK(run_cli("compare primal:4,3 dual:4,3") == cli::kOk);
  CHECK(run_cli("simulate dual:2,1 --jmax 8") == cli::kOk);
}
