#pragma once

// JSON / CSV export. Exact values go to JSON as [num, den] decimal-string
// pairs and to CSV as "num/den"; floats appear only in modular reports.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swtwist/characters.hpp"
#include "swtwist/modular.hpp"
#include "swtwist/qseries.hpp"
#include "swtwist/report.hpp"
#include "swtwist/zhu.hpp"

namespace swtwist {

using Json = nlohmann::json;

inline const char* kSchemaVersion = "1";

inline Json rational_json(const Rational& r) { return Json::array({num(r).str(), den(r).str()}); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("expected [num, den] string pair");
  return rat(parse_bigint(j[0].get<std::string>()), parse_bigint(j[1].get<std::string>()));
}

inline Json series_json(const ExactSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", rational_json(e)}, {"coef", rational_json(c)}});
  return {{"cutoff", rational_json(s.cutoff())}, {"terms", terms}};
}

inline Json series_json(const ComplexSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"exp", rational_json(e)}, {"coef", {{"re", c.real()}, {"im", c.imag()}}}});
  return {{"cutoff", rational_json(s.cutoff())}, {"terms", terms}};
}

inline ExactSeries exact_series_from_json(const Json& j) {
  ExactSeries::Terms t;
  for (const auto& term : j.at("terms")) {
    Rational c = rational_from_json(term.at("coef"));
    if (c != 0) t[rational_from_json(term.at("exp"))] += c;
  }
  return ExactSeries(std::move(t), rational_from_json(j.at("cutoff")));
}

inline ComplexSeries complex_series_from_json(const Json& j) {
  ComplexSeries::Terms t;
  for (const auto& term : j.at("terms")) {
    const Json& c = term.at("coef");
    t[rational_from_json(term.at("exp"))] += Complex(c.at("re").get<double>(), c.at("im").get<double>());
  }
  return ComplexSeries(std::move(t), rational_from_json(j.at("cutoff")));
}

// ---- character tables ----

struct CharacterRow {
  ModuleLabel label;
  ExactSeries series;
};

inline std::vector<CharacterRow> character_rows(const std::vector<ModuleLabel>& labels, const Rational& cutoff) {
  std::vector<CharacterRow> rows;
  for (const auto& l : labels) {
    l.validate();
    rows.push_back({l, module_char(l, cutoff)});
  }
  return rows;
}

inline Json character_table_json(int m, const Rational& cutoff, const std::vector<CharacterRow>& rows) {
  Json out = {{"schema", kSchemaVersion}, {"m", m}, {"cutoff", rational_json(cutoff)}};
  Json arr = Json::array();
  for (const auto& r : rows) {
    auto lead = r.series.min_exponent();
    arr.push_back({{"label", r.label.name()},
                   {"m", r.label.m},
                   {"leading_exponent", lead ? rational_json(*lead) : Json(nullptr)},
                   {"coefficients", series_json(r.series)["terms"]}});
  }
  out["characters"] = arr;
  return out;
}

inline std::string character_table_csv(const std::vector<CharacterRow>& rows) {
  std::ostringstream os;
  os << "label,m,exponent,coefficient\n";
  for (const auto& r : rows)
    for (const auto& [e, c] : r.series.terms())
      os << r.label.name() << ',' << r.label.m << ',' << to_string(e) << ',' << to_string(c) << '\n';
  return os.str();
}

// ---- classification ----

inline Json classification_json(int m, const std::vector<TwistedModuleRecord>& recs) {
  Json arr = Json::array();
  for (const auto& r : recs)
    arr.push_back({{"label", r.label.name()},
                   {"weight", rational_json(r.lowest_weight)},
                   {"top_dimension", r.top_dim_graded},
                   {"g0_squared", rational_json(r.g0_squared)}});
  return {{"schema", kSchemaVersion}, {"m", m}, {"modules", arr}};
}

inline std::string classification_csv(const std::vector<TwistedModuleRecord>& recs) {
  std::ostringstream os;
  os << "label,weight,top_dimension,g0_squared\n";
  for (const auto& r : recs)
    os << r.label.name() << ',' << to_string(r.lowest_weight) << ',' << r.top_dim_graded << ','
       << to_string(r.g0_squared) << '\n';
  return os.str();
}

// ---- verification reports ----

inline Json report_json(const Report& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"schema", kSchemaVersion}, {"suite", rep.suite}, {"passed", rep.all_passed()}, {"checks", checks}};
}

inline std::string report_csv(const Report& rep) {
  std::ostringstream os;
  os << "suite,name,passed,anchor\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (const auto& c : rep.checks)
    os << rep.suite << ',' << quote(c.name) << ',' << (c.passed ? "true" : "false") << ',' << quote(c.anchor) << '\n';
  return os.str();
}

// ---- modular reports ----

inline Json grid_json(const SampleGrid& g) {
  return {{"points", g.points.size()}, {"cutoff", rational_json(g.cutoff)}};
}

inline Json modular_header(const std::string& test, int m, const SampleGrid& g) {
  return {{"schema", kSchemaVersion}, {"test", test}, {"m", m}, {"cutoff", rational_json(g.cutoff)}, {"grid", grid_json(g)}};
}

inline Json rank_json(const ClosureRank& r, const SampleGrid& g) {
  Json out = modular_header("rank", r.m, g);
  out["rank"] = r.rank;
  out["expected"] = r.basis_size;
  out["augmented_rank"] = r.augmented_rank;
  out["gap"] = r.gap;
  out["smallest_ratio"] = r.smallest_ratio;
  out["well_conditioned"] = r.well_conditioned;
  return out;
}

inline Json closure_json(int m, const ClosureFit& f, const SampleGrid& g) {
  Json out = modular_header("closure", m, g);
  out["residual"] = {{"S", f.s_residual}, {"T", f.t_residual}, {"negative_control", f.negative_control}};
  return out;
}

// MDE coefficients keyed by the monomial name and its exponent vector
inline Json mde_json(const MdeResult& r) {
  Json coeffs = Json::array();
  for (int j = 0; j < static_cast<int>(r.coefficients.size()); ++j) {
    Json terms = Json::array();
    for (const auto& t : r.coefficients[j])
      terms.push_back({{"monomial", t.monomial.name()}, {"exponents", t.monomial.exps},
                       {"coefficient", rational_json(t.coefficient)}});
    coeffs.push_back({{"j", j}, {"terms", terms}});
  }
  return {{"schema", kSchemaVersion}, {"test", "mde"},     {"m", r.m},
          {"order", r.order},         {"found", r.found},   {"q_order", r.q_order},
          {"unknowns", r.unknowns},   {"equations", r.equations}, {"rank", r.rank},
          {"coefficients", coeffs}};
}

}  // namespace swtwist
