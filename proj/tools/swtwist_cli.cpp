// swtwist: character tables, verification suites and modular checks.
// Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "swtwist/io.hpp"
#include "swtwist/verify.hpp"

using namespace swtwist;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 1;
  std::string cutoff;  // empty: command default
  std::string format = "json";
  double tolerance = 1e-8;
  std::string out;

  Rational cutoff_or(const Rational& fallback) const {
    if (cutoff.empty()) return fallback;
    Rational c;
    try {
      c = parse_rational(cutoff);
    } catch (const std::exception&) {
      throw UsageError("cutoff must be a rational number, got '" + cutoff + "'");
    }
    if (c <= 1) throw UsageError("cutoff must be > 1");
    return c;
  }
  void validate() const {
    if (m < 1) throw UsageError("m must be ≥ 1");
    if (!(tolerance > 0)) throw UsageError("tolerance must be > 0");
    if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- char ----

struct CharArgs {
  std::string family;
  int index = 0;
  bool all = false;
  bool super = false;
};

int cmd_char(const RunConfig& cfg, const CharArgs& a) {
  std::vector<ModuleLabel> labels;
  if (a.all) {
    labels = all_labels(cfg.m);
  } else {
    if (a.family.empty()) throw UsageError("char needs --family and --index, or --all");
    Family fam;
    try {
      fam = parse_family(a.family);
    } catch (const std::exception&) {
      throw UsageError("unknown family '" + a.family + "'; valid: RLambda, RPi, SLambda, SPi");
    }
    ModuleLabel l{fam, a.index, cfg.m, a.super ? Flavor::Supercharacter : Flavor::Character};
    try {
      l.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    labels.push_back(l);
  }
  Rational cut = cfg.cutoff_or(Rational(30));
  auto rows = character_rows(labels, cut);
  emit(cfg, cfg.format == "csv" ? character_table_csv(rows) : dump(character_table_json(cfg.m, cut, rows)));
  return kPass;
}

int cmd_classify(const RunConfig& cfg) {
  auto recs = classify_twisted(cfg.m);
  emit(cfg, cfg.format == "csv" ? classification_csv(recs) : dump(classification_json(cfg.m, recs)));
  return kPass;
}

// ---- verify ----

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool inject) {
  const Rational numeric_cut = cfg.cutoff_or(Rational(400));
  std::vector<std::future<Report>> jobs;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("zhu")) jobs.push_back(std::async(std::launch::async, [&] { return zhu_suite(cfg.m, inject); }));
  if (want("fermion")) jobs.push_back(std::async(std::launch::async, [&] { return fermion_suite(inject); }));
  if (want("characters"))
    jobs.push_back(std::async(std::launch::async, [&] { return characters_suite(cfg.m, inject); }));
  if (want("theta"))
    jobs.push_back(
        std::async(std::launch::async, [&] { return theta_suite(cfg.m, numeric_cut, cfg.tolerance, inject); }));
  if (jobs.empty()) throw UsageError("unknown suite '" + suite + "'; valid: zhu, fermion, characters, theta, all");

  Report rep{suite, {}};
  for (auto& j : jobs) rep.merge(j.get());
  emit(cfg, cfg.format == "csv" ? report_csv(rep) : dump(report_json(rep)));
  for (const auto& name : rep.failed_names()) std::cerr << "FAILED: " << name << "\n";
  return rep.all_passed() ? kPass : kFail;
}

// ---- modular ----

int cmd_modular(const RunConfig& cfg, const std::string& check, int q_order) {
  if (cfg.format != "json") throw UsageError("modular reports are JSON only");
  if (check == "mde") {
    if (cfg.m > 2) throw UsageError("mde is limited to m = 1, 2");
    if (cfg.m == 2) std::cerr << "warning: the m = 2 system is large and slow\n";
    auto r = find_mde(cfg.m, q_order);
    emit(cfg, dump(mde_json(r)));
    return r.found ? kPass : kFail;
  }
  Rational cut = cfg.cutoff_or(Rational(400));
  if (cut < 100) throw UsageError("numeric cutoff must be ≥ 100");
  SampleGrid grid = SampleGrid::standard(cut);
  ModularEvaluator ev(cut);
  if (check == "rank") {
    auto r = closure_rank(cfg.m, grid, ev);
    if (!r.well_conditioned) std::cerr << "warning: ill-conditioned grid, smallest ratio " << r.smallest_ratio << "\n";
    emit(cfg, dump(rank_json(r, grid)));
    return r.rank == r.basis_size && r.gap > 1e6 ? kPass : kFail;
  }
  if (check == "closure") {
    auto f = closure_under_S_T(cfg.m, grid, ev);
    emit(cfg, dump(closure_json(cfg.m, f, grid)));
    return f.s_residual < 1e-6 && f.t_residual < 1e-6 && f.negative_control > 1e-2 ? kPass : kFail;
  }
  if (check == "s-transform") {
    Json out = modular_header("s-transform", cfg.m, grid);
    Json per = Json::array();
    double worst = 0;
    for (const auto& idx : character_theta_indices(cfg.m))
      for (bool d : {false, true}) {
        double g = s_transform_residual(idx, d, ThetaLaw::General, grid, ev);
        double h = s_transform_residual(idx, d, ThetaLaw::HalfIntegerBlock, grid, ev);
        worst = std::max({worst, g, h});
        per.push_back({{"j", rational_json(idx.j)}, {"k", rational_json(idx.k)}, {"derivative", d},
                       {"general", g}, {"half_integer_block", h}});
      }
    out["indices"] = per;
    out["residual"] = worst;
    out["tolerance"] = cfg.tolerance;
    emit(cfg, dump(out));
    return worst < cfg.tolerance ? kPass : kFail;
  }
  throw UsageError("unknown modular check '" + check + "'; valid: rank, closure, s-transform, mde");
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "positive integer m");
  sub->add_option("--cutoff", cfg.cutoff, "q-exponent cutoff, rational (default 30 exact, 400 numeric)");
  sub->add_option("--format", cfg.format, "json or csv");
  sub->add_option("--tolerance", cfg.tolerance, "numeric tolerance (default 1e-8)");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swtwist: twisted modules of the super W-algebra SW(m)"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ch = app.add_subcommand("char", "character table");
  add_common(ch, cfg);
  CharArgs ca;
  ch->add_option("--family", ca.family, "RLambda, RPi, SLambda or SPi");
  ch->add_option("--index", ca.index, "module index");
  ch->add_flag("--all", ca.all, "all twisted, untwisted and supercharacter rows");
  ch->add_flag("--super", ca.super, "supercharacter of an SLambda / SPi module");

  auto* cl = app.add_subcommand("classify", "twisted module classification table");
  add_common(cl, cfg);

  auto* ve = app.add_subcommand("verify", "invariant suites");
  add_common(ve, cfg);
  std::string suite = "all";
  bool inject = false;
  ve->add_option("--suite", suite, "zhu, fermion, characters, theta or all");
  ve->add_flag("--inject-fault", inject, "perturb one constant per suite (test hook)");

  auto* mo = app.add_subcommand("modular", "numerical modular checks");
  add_common(mo, cfg);
  std::string check;
  int q_order = 60;
  mo->add_option("check", check, "rank, closure, s-transform or mde")->required();
  mo->add_option("--q-order", q_order, "mde: number of q-orders imposed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    cfg.validate();
    if (ch->parsed()) return cmd_char(cfg, ca);
    if (cl->parsed()) return cmd_classify(cfg);
    if (ve->parsed()) return cmd_verify(cfg, suite, inject);
    return cmd_modular(cfg, check, q_order);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
