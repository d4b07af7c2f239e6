// coxpres: Cox ring presentations of complete rank-2 collineation spaces.

#include "coxpres/collineation.hpp"
#include "coxpres/serialize.hpp"
#include "coxpres/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace coxpres;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  int c = 0;
  int d = 0;
  std::string format = "text";
  std::vector<std::string> checks;
  std::size_t budget = 0;  // 0: not given on the command line
  bool strict = false;
  std::string out;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App* cmd, Config& cfg, bool with_checks) {
  cmd->add_option("--c", cfg.c, "dimension of V (>= 2)")->required();
  cmd->add_option("--d", cfg.d, "dimension of W (>= 2)")->required();
  cmd->add_option("--format", cfg.format, "text, json or cas-export")
      ->check(CLI::IsMember({"text", "json", "cas-export"}));
  cmd->add_option("--out", cfg.out, "write output to this file instead of stdout");
  if (with_checks) {
    cmd->add_option("--checks", cfg.checks, "comma-separated check ids")->delimiter(',');
    cmd->add_option("--budget", cfg.budget, "Groebner pair budget")->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", cfg.strict, "treat budget skips as failures");
  }
}

std::size_t resolve_budget(const Config& cfg) {
  if (cfg.budget > 0) return cfg.budget;
  if (const char* env = std::getenv("COXPRES_BUDGET")) {
    try {
      long v = std::stol(env);
      if (v <= 0) throw std::invalid_argument("non-positive");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("COXPRES_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return kDefaultPairBudget;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + cfg.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cone_text(const RationalCone& cone) {
  std::string s;
  for (const auto& g : cone.generators()) s += (s.empty() ? "" : " ") + to_string(g);
  return s.empty() ? "{0}" : s;
}

int cmd_present(const Config& cfg) {
  auto pres = cox_presentation(Params::make(cfg.c, cfg.d));
  if (cfg.format == "json") emit(cfg, dump(presentation_to_json(pres)));
  else if (cfg.format == "cas-export") emit(cfg, cas_export(pres));
  else emit(cfg, presentation_to_text(pres));
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  if (cfg.format == "cas-export") throw UsageError("verify supports --format text or json");
  Params p = Params::make(cfg.c, cfg.d);
  auto ids = cfg.checks.empty() ? default_checks(p) : cfg.checks;
  for (const auto& id : ids)
    if (!is_known_check(id)) throw UsageError("unknown check: " + id);
  GroebnerOptions options{resolve_budget(cfg)};
  auto report = run_verification(p, ids, options);
  emit(cfg, cfg.format == "json" ? dump(report_to_json(report)) : report_to_text(report));
  if (report.any_failed()) return kExitCheckFailed;
  if (cfg.strict && report.any_budget_skip()) return kExitCheckFailed;
  return kExitOk;
}

int cmd_cones(const Config& cfg) {
  if (cfg.format == "cas-export") throw UsageError("cones supports --format text or json");
  Params p = Params::make(cfg.c, cfg.d);
  if (!p.general())
    throw UsageError("the effective/movable cone description applies only for c, d > 2");
  auto pres = cox_presentation(p);
  auto cones = mori_cones(generator_degrees(pres));
  const std::string note = "semiample cone equals the movable cone (cited, not recomputed)";
  if (cfg.format == "json") {
    Json j{{"c", p.c},
           {"d", p.d},
           {"effective", cone_to_json(cones.effective)},
           {"movable", cone_to_json(cones.movable)},
           {"semiample", note}};
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    os << "Eff rays: " << cone_text(cones.effective) << '\n'
       << "Mov rays: " << cone_text(cones.movable) << '\n'
       << "SAmple = Mov: " << note << '\n';
    emit(cfg, os.str());
  }
  return kExitOk;
}

int cmd_gitfan(const Config& cfg) {
  if (cfg.format == "cas-export") throw UsageError("gitfan supports --format text or json");
  Params p = Params::make(cfg.c, cfg.d);
  auto fan = git_fan(weight_matrices(p).q);
  auto w = witness_points(p);
  auto all_zero = [](const std::vector<Rational>& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
  };
  if (cfg.format == "json") {
    Json chambers = Json::array();
    for (const auto& ch : fan.chambers) chambers.push_back(cone_to_json(ch));
    Json witnesses = Json::array();
    for (const auto* x : {&w.x1, &w.x2}) {
      Json point = Json::object();
      for (const auto& [ij, v] : x->coords) point[plucker_name(ij.first, ij.second)] = rational_to_json(v);
      const auto& res = x == &w.x1 ? w.residuals1 : w.residuals2;
      Json residuals = Json::array();
      for (const auto& r : res) residuals.push_back(rational_to_json(r));
      witnesses.push_back(Json{{"point", point},
                               {"residuals", residuals},
                               {"all_zero", all_zero(res)},
                               {"orbit_cone", cone_to_json(x == &w.x1 ? w.omega1 : w.omega2)}});
    }
    emit(cfg, dump(Json{{"c", p.c},
                        {"d", p.d},
                        {"fan", fan_to_json(fan.fan)},
                        {"chambers", chambers},
                        {"degenerate", fan.degenerate},
                        {"witnesses", witnesses}}));
  } else {
    std::ostringstream os;
    os << "GIT chambers:\n";
    for (const auto& ch : fan.chambers) os << "  cone " << cone_text(ch) << '\n';
    os << "witness x1: residuals " << (all_zero(w.residuals1) ? "all 0" : "NONZERO")
       << ", orbit cone " << cone_text(w.omega1) << '\n';
    os << "witness x2: residuals " << (all_zero(w.residuals2) ? "all 0" : "NONZERO")
       << ", orbit cone " << cone_text(w.omega2) << '\n';
    emit(cfg, os.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cox ring presentations of spaces of complete rank-2 collineations"};
  app.require_subcommand(1);
  Config cfg;
  auto* present = app.add_subcommand("present", "print the Cox ring presentation");
  auto* verify = app.add_subcommand("verify", "run the verification checks");
  auto* cones = app.add_subcommand("cones", "effective and movable cones");
  auto* gitfan = app.add_subcommand("gitfan", "GIT fan of the 2-torus action with witness points");
  add_common_options(present, cfg, false);
  add_common_options(verify, cfg, true);
  add_common_options(cones, cfg, false);
  add_common_options(gitfan, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*present) return cmd_present(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*cones) return cmd_cones(cfg);
    if (*gitfan) return cmd_gitfan(cfg);
  } catch (const UnsupportedParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
