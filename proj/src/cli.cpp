// SPDX-FileCopyrightText: 2026 subdivreg authors
// SPDX-License-Identifier: Apache-2.0
#include "subdivreg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "subdivreg/errors.hpp"
#include "subdivreg/subdivision.hpp"

namespace subdivreg::cli {

namespace {

Json rational_array(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(format_rational(x));
  return out;
}

Json interval_json(const RatInterval& iv) {
  return Json{{"lo", format_rational(iv.lo)}, {"hi", format_rational(iv.hi)}};
}

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

FamilyKind parse_kind(const std::string& word) {
  if (word == "primal") return FamilyKind::Primal;
  if (word == "dual") return FamilyKind::Dual;
  throw ParseError("unknown family kind \"" + word +
                   "\" (expected primal or dual)");
}

}  // namespace

std::string format_fixed5(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  return buf;
}

InputSpec spec_from_family(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos)
    throw ParseError("family spec must look like kind:m,l (got \"" + text +
                     "\")");
  FamilyId id;
  id.kind = parse_kind(text.substr(0, colon));
  try {
    id.m = std::stoi(text.substr(colon + 1, comma - colon - 1));
    id.l = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("family spec must look like kind:m,l (got \"" + text +
                     "\")");
  }
  try {
    validate(id);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return {family_symbol(id), id, "family " + to_string(id)};
}

InputSpec spec_from_mask(const std::string& coeff_list, int offset) {
  std::vector<Rational> coeffs;
  std::stringstream ss(coeff_list);
  std::string item;
  while (std::getline(ss, item, ','))
    coeffs.push_back(parse_rational(item));
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  InputSpec out;
  out.symbol = LaurentPoly(offset, coeffs);
  std::string canon = "mask offset=" + std::to_string(offset) + " coeffs=";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    canon += (i ? "," : "") + format_rational(coeffs[i]);
  out.canonical = canon;
  return out;
}

InputSpec spec_from_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mask file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParseError("invalid mask file " + path + ": " + e.what());
  }
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array() ||
      doc["coeffs"].empty())
    throw ParseError("mask file needs a nonempty \"coeffs\" array");
  std::string list;
  for (const auto& c : doc["coeffs"]) {
    if (!list.empty()) list += ",";
    if (c.is_string())
      list += c.get<std::string>();
    else if (c.is_number_integer())
      list += std::to_string(c.get<long long>());
    else
      throw ParseError("mask coefficients must be rational strings");
  }
  const int offset = doc.value("offset", 0);
  return spec_from_mask(list, offset);
}

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json make_provenance(const Json& input_description) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a_hash(input_description.dump())));
  return Json{{"input", input_description},
              {"input_hash", hash},
              {"tool_version", kToolVersion},
              {"generated_at", iso_utc_now()}};
}

namespace {

Json positivity_json(const PositivityVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["witness"] = v.witness ? interval_json(*v.witness) : Json(nullptr);
  return out;
}

Json report_json(const RegularityReport& rep) {
  Json out;
  out["r"] = rep.r;
  out["one_plus_z_multiplicity"] = rep.one_plus_z_multiplicity;
  out["p"] = rep.p;
  out["half_mask"] = rational_array(rep.half_mask);
  out["b_poly"] = rational_array(rep.b_polynomial.coeffs());
  out["positivity"] = positivity_json(rep.positivity);
  if (rep.folded) {
    Json rows = Json::array();
    for (int i = 0; i < rep.folded->n(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < rep.folded->n(); ++j)
        row.push_back(format_rational(rep.folded->at(i, j)));
      rows.push_back(row);
    }
    out["folded_matrix"] = rows;
  } else {
    out["folded_matrix"] = Json(nullptr);
  }
  if (rep.rho) {
    out["char_poly"] = rational_array(rep.rho->charpoly);
    out["rho"] = Json{{"estimate", rep.rho->estimate},
                      {"radius_bound", rep.rho->radius_bound},
                      {"lo", format_rational(rep.rho->bounds.lo)},
                      {"hi", format_rational(rep.rho->bounds.hi)}};
  } else {
    out["char_poly"] = Json(nullptr);
    out["rho"] = Json(nullptr);
  }
  out["gamma"] = rep.gamma ? Json(*rep.gamma) : Json(nullptr);
  out["optimal"] = rep.optimal;
  out["integer_exponent_caveat"] = rep.integer_exponent_caveat;
  out["notes"] = rep.notes;
  return out;
}

Json input_description(const InputSpec& in) {
  Json desc;
  desc["canonical"] = in.canonical;
  if (in.family) desc["family"] = to_string(*in.family);
  return desc;
}

}  // namespace

Json analyze_document(const InputSpec& in, std::optional<int> r_override) {
  const RegularityReport rep = analyze(in.symbol, r_override);
  Json out;
  out["tool"] = "subdivreg";
  out["command"] = "analyze";
  out["symbol"] = Json{{"low", in.symbol.low()},
                       {"coeffs", rational_array(in.symbol.coeffs())}};
  out["report"] = report_json(rep);
  out["provenance"] = make_provenance(input_description(in));
  return out;
}

std::string render_analyze_text(const Json& doc) {
  const Json& r = doc["report"];
  std::ostringstream os;
  os << "input:        " << doc["provenance"]["input"]["canonical"]
            .get<std::string>() << "\n";
  os << "symbol:       low " << doc["symbol"]["low"].get<int>() << ", "
     << doc["symbol"]["coeffs"].size() << " coefficients\n";
  os << "factorization: (1+z)^" << r["one_plus_z_multiplicity"].get<int>()
     << " extracted, derived exponent r = " << r["r"].get<int>() << "\n";
  os << "half mask:    [";
  for (std::size_t i = 0; i < r["half_mask"].size(); ++i)
    os << (i ? ", " : "") << r["half_mask"][i].get<std::string>();
  os << "], p = " << r["p"].get<int>() << "\n";
  os << "B(s) coeffs:  [";
  for (std::size_t i = 0; i < r["b_poly"].size(); ++i)
    os << (i ? ", " : "") << r["b_poly"][i].get<std::string>();
  os << "]\n";
  os << "positivity:   " << r["positivity"]["kind"].get<std::string>() << "\n";
  if (!r["rho"].is_null()) {
    os << "rho:          " << r["rho"]["estimate"].get<double>()
       << "  (radius bound " << r["rho"]["radius_bound"].get<double>() << ")\n";
  }
  if (!r["gamma"].is_null()) {
    os << "gamma:        " << format_fixed5(r["gamma"].get<double>())
       << "  (r - log2(rho))\n";
    os << "optimal:      " << (r["optimal"].get<bool>() ? "yes" : "no")
       << (r["integer_exponent_caveat"].get<bool>()
               ? "  [integer exponent: strict inequality]"
               : "")
       << "\n";
  } else {
    os << "gamma:        (not produced)\n";
  }
  const auto notes = r["notes"].get<std::string>();
  if (!notes.empty()) os << "notes:        " << notes << "\n";
  return os.str();
}

Json table_document(FamilyKind kind, int m_max) {
  if (m_max < 2) throw ParseError("table needs m_max >= 2");
  Json entries = Json::array();
  for (int m = 2; m <= m_max; ++m)
    for (int l = 1; l <= m - 1; ++l) {
      const FamilyId id{kind, m, l};
      const RegularityReport rep = analyze(family_symbol(id));
      entries.push_back(Json{{"m", m},
                             {"l", l},
                             {"gamma", rep.gamma.value()},
                             {"gamma_5dp", format_fixed5(rep.gamma.value())},
                             {"optimal", rep.optimal},
                             {"integer_exponent_caveat",
                              rep.integer_exponent_caveat}});
    }
  Json out;
  out["tool"] = "subdivreg";
  out["command"] = "table";
  out["kind"] = kind == FamilyKind::Primal ? "primal" : "dual";
  out["m_max"] = m_max;
  out["entries"] = entries;
  out["provenance"] = make_provenance(
      Json{{"canonical", std::string("table ") +
                             (kind == FamilyKind::Primal ? "primal" : "dual") +
                             " " + std::to_string(m_max)}});
  return out;
}

namespace {

// entries -> gamma_5dp strings indexed by (m, l)
std::string table_cell(const Json& doc, int m, int l) {
  for (const auto& e : doc["entries"])
    if (e["m"].get<int>() == m && e["l"].get<int>() == l)
      return e["gamma_5dp"].get<std::string>();
  return "";
}

}  // namespace

std::string render_table_text(const Json& doc) {
  const int m_max = doc["m_max"].get<int>();
  std::ostringstream os;
  os << "     ";
  for (int l = 1; l <= m_max - 1; ++l) {
    char head[16];
    std::snprintf(head, sizeof head, "%10s", ("l=" + std::to_string(l)).c_str());
    os << head;
  }
  os << "\n";
  for (int m = 2; m <= m_max; ++m) {
    char row[16];
    std::snprintf(row, sizeof row, "m=%-3d", m);
    os << row;
    for (int l = 1; l <= m - 1; ++l) {
      char cell[16];
      std::snprintf(cell, sizeof cell, "%10s", table_cell(doc, m, l).c_str());
      os << cell;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_table_csv(const Json& doc) {
  const int m_max = doc["m_max"].get<int>();
  std::ostringstream os;
  os << "m";
  for (int l = 1; l <= m_max - 1; ++l) os << ",l=" << l;
  os << "\n";
  for (int m = 2; m <= m_max; ++m) {
    os << m;
    for (int l = 1; l <= m_max - 1; ++l)
      os << "," << (l <= m - 1 ? table_cell(doc, m, l) : "");
    os << "\n";
  }
  return os.str();
}

Json compare_document(const FamilyId& base, const FamilyId& target) {
  const ComparisonResult res = compare_members(base, target);
  const RegularityReport base_rep = analyze(family_symbol(base));
  const RegularityReport target_rep = analyze(family_symbol(target));
  Json out;
  out["tool"] = "subdivreg";
  out["command"] = "compare";
  out["base"] = to_string(base);
  out["target"] = to_string(target);
  out["c_star"] = Json{{"estimate", res.c_star.estimate},
                       {"radius", res.c_star.radius},
                       {"lo", format_rational(res.c_star.bounds.lo)},
                       {"hi", format_rational(res.c_star.bounds.hi)},
                       {"exact", res.c_star.exact()}};
  out["pattern"] = res.pattern ? Json(to_string(*res.pattern)) : Json(nullptr);
  out["c_theorem"] =
      res.c_theorem ? Json(format_rational(*res.c_theorem)) : Json(nullptr);
  out["r_base"] = res.r_base;
  out["r_target"] = res.r_target;
  out["gap_bound"] = res.gap_bound;
  out["gamma_base"] = base_rep.gamma.value();
  out["gamma_target"] = target_rep.gamma.value();
  out["gap_actual"] = target_rep.gamma.value() - base_rep.gamma.value();
  out["provenance"] = make_provenance(Json{
      {"canonical", "compare " + to_string(base) + " " + to_string(target)}});
  return out;
}

std::string render_compare_text(const Json& doc) {
  std::ostringstream os;
  os << "base:     " << doc["base"].get<std::string>() << "  (gamma "
     << format_fixed5(doc["gamma_base"].get<double>()) << ")\n";
  os << "target:   " << doc["target"].get<std::string>() << "  (gamma "
     << format_fixed5(doc["gamma_target"].get<double>()) << ")\n";
  os << "c_star:   " << doc["c_star"]["estimate"].get<double>();
  if (doc["c_star"]["exact"].get<bool>())
    os << "  (= " << doc["c_star"]["lo"].get<std::string>() << " exactly)";
  else
    os << "  (radius " << doc["c_star"]["radius"].get<double>() << ")";
  os << "\n";
  if (!doc["pattern"].is_null())
    os << "pattern:  " << doc["pattern"].get<std::string>()
       << ", proved constant " << doc["c_theorem"].get<std::string>() << "\n";
  os << "gap:      gamma_target - gamma_base >= "
     << format_fixed5(doc["gap_bound"].get<double>()) << "  (actual "
     << format_fixed5(doc["gap_actual"].get<double>()) << ")\n";
  return os.str();
}

Json simulate_document(const InputSpec& in, const SimulateOptions& opt) {
  if (opt.jmax < 2) throw ParseError("simulate needs --jmax >= 2");
  const RegularityReport rep = analyze(in.symbol);
  Json out;
  out["tool"] = "subdivreg";
  out["command"] = "simulate";
  out["jmax"] = opt.jmax;
  out["r"] = rep.r;
  out["p"] = rep.p;
  out["positivity"] = to_string(rep.positivity.kind);
  if (rep.positivity.kind == Positivity::Indefinite) {
    out["notes"] = rep.notes;
    out["provenance"] = make_provenance(input_description(in));
    return out;
  }
  const SymmetricMask mask{rep.half_mask};
  const auto central = central_sequence(mask, opt.jmax);
  const auto emp = empirical_rho(mask, opt.jmax);
  out["rho_algebraic"] = rep.rho->estimate;
  out["central"] = rational_array(central);
  Json ratios = Json::array();
  for (std::size_t j = 1; j < central.size(); ++j)
    ratios.push_back(sign(central[j - 1]) == 0
                         ? Json(nullptr)
                         : Json(to_double(central[j] / central[j - 1])));
  out["ratios"] = ratios;
  out["ratio_final"] = emp.ratio;
  out["jth_root"] = emp.jth_root;
  out["abs_diff"] = std::abs(emp.ratio - rep.rho->estimate);
  if (opt.check_lemma2) {
    const int level = std::min(opt.jmax, opt.lemma2_level_cap);
    out["lemma2"] = Json{{"checked_to_level", level},
                         {"max_at_center", max_center_check(mask, level)}};
  } else {
    out["lemma2"] = Json(nullptr);
  }
  out["gamma"] = rep.gamma ? Json(*rep.gamma) : Json(nullptr);
  out["provenance"] = make_provenance(input_description(in));
  return out;
}

std::string render_simulate_text(const Json& doc) {
  std::ostringstream os;
  os << "input:       " << doc["provenance"]["input"]["canonical"]
            .get<std::string>() << "\n";
  if (!doc.contains("rho_algebraic")) {
    os << "method inapplicable: " << doc["notes"].get<std::string>() << "\n";
    return os.str();
  }
  os << "r = " << doc["r"].get<int>() << ", p = " << doc["p"].get<int>()
     << ", jmax = " << doc["jmax"].get<int>() << "\n";
  const auto& central = doc["central"];
  os << "central coefficients (first/last): " << central.front().get<std::string>()
     << " ... " << central.back().get<std::string>() << "\n";
  os << "ratio estimate:  " << doc["ratio_final"].get<double>() << "\n";
  os << "jth root:        " << doc["jth_root"].get<double>() << "\n";
  os << "algebraic rho:   " << doc["rho_algebraic"].get<double>() << "\n";
  os << "difference:      " << doc["abs_diff"].get<double>() << "\n";
  if (!doc["lemma2"].is_null()) {
    os << "max at center:   "
       << (doc["lemma2"]["max_at_center"].get<bool>() ? "PASS (exact)"
                                                      : "FAIL")
       << "  (levels 0.." << doc["lemma2"]["checked_to_level"].get<int>()
       << ")\n";
  }
  return os.str();
}

std::string samples_csv(const InputSpec& in, int levels) {
  if (levels < 0) throw ParseError("samples level must be >= 0");
  const DyadicSequence seq = cardinal_samples(in.symbol, levels);
  std::ostringstream os;
  os << "x,value\n";
  const double h = std::ldexp(1.0, -seq.level);
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g",
                  h * (seq.low + static_cast<double>(k)),
                  to_double(seq.values[k]));
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace subdivreg::cli
