#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kfilt/scenario.hpp"

namespace {

using namespace kfilt;

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::optional<int> cases;
  std::string report_path;
  bool quiet = false;
};

int finish(const Report& rep, const GlobalOpts& go) {
  if (!go.report_path.empty()) {
    std::ofstream f(go.report_path);
    if (!f) {
      std::cerr << "cannot write report to " << go.report_path << "\n";
      return 2;
    }
    f << report_to_json(rep).dump(2) << "\n";
  }
  if (!go.quiet) std::cout << report_text(rep);
  return rep.ok() ? 0 : 1;
}

void merge(Report& into, Report sub, const std::string& prefix) {
  for (CheckResult& c : sub.checks) {
    c.name = prefix + c.name;
    into.add(std::move(c));
  }
}

// Run one check descriptor against the built-in geometry for d = 1, 2, 3.
int run_builtin(const nlohmann::json& check, const GlobalOpts& go) {
  Report rep;
  rep.scenario = "builtin";
  RunOptions opt{go.seed, go.cases, go.quiet};
  rep.seed = go.seed.value_or(0);
  for (int d = 1; d <= 3; ++d) {
    Scenario sc = builtin_suite_scenario(d);
    sc.seed = rep.seed;
    sc.checks.push_back(check);
    merge(rep, run_scenario(sc, opt), "d=" + std::to_string(d) + "/");
  }
  return finish(rep, go);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-cycle filtration toolkit"};
  app.require_subcommand(1);

  GlobalOpts go;
  std::uint64_t seed_val = 0;
  int cases_val = 0;
  app.add_option("--seed", seed_val, "seed for randomized suites");
  app.add_option("--cases", cases_val, "number of random cases per check");
  app.add_option("--report", go.report_path, "write a JSON report to this path");
  app.add_flag("--quiet", go.quiet, "suppress console output");

  std::string file, expr, scen_path;
  int r = 2, gdim = 1;

  CLI::App* validate = app.add_subcommand("validate", "validate a scenario file");
  validate->add_option("file", file)->required();

  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("file", file)->required();

  CLI::App* normalize = app.add_subcommand("normalize", "normalize a symbol expression");
  normalize->add_option("expr", expr)->required();
  normalize->add_option("--scenario", scen_path, "scenario providing atoms")->required();

  CLI::App* phi = app.add_subcommand("phi", "trace-compatibility suite for the forward map");
  phi->add_option("--r", r)->required();

  CLI::App* psi = app.add_subcommand("psi", "path-equivalence suite for the cycle map");
  psi->add_option("--r", r)->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "round-trip suite");
  roundtrip->add_option("--r", r)->required();

  CLI::App* genus2 = app.add_subcommand("genus2", "run the bundled genus-2 example");

  CLI::App* vanish = app.add_subcommand("vanish", "structural vanishing scan");
  vanish->add_option("--r", r)->required();
  vanish->add_option("--g", gdim)->required();

  // Let --seed/--cases/--report/--quiet appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (app.count("--seed")) go.seed = seed_val;
  if (app.count("--cases")) go.cases = cases_val;

  try {
    if (validate->parsed()) {
      Scenario sc = load_scenario(file);
      ValidationReport vr = sc.geom.validate_models(sc.levels);
      if (!vr.ok()) {
        for (const std::string& v : vr.violations) std::cerr << v << "\n";
        return 2;
      }
      if (!go.quiet) std::cout << "ok\n";
      return 0;
    }
    if (run->parsed()) {
      Scenario sc = load_scenario(file);
      return finish(run_scenario(sc, RunOptions{go.seed, go.cases, go.quiet}), go);
    }
    if (normalize->parsed()) {
      Scenario sc = load_scenario(scen_path);
      SymbolDatum S = parse_symbol_expr(sc, expr);
      std::cout << to_string(sc.geom, datum_symbol(sc.geom, S)) << "\n";
      return 0;
    }
    if (phi->parsed())
      return run_builtin({{"check", "trace_compatibility"}, {"r", r}}, go);
    if (psi->parsed())
      return run_builtin({{"check", "path_equivalence"}, {"r", r}}, go);
    if (roundtrip->parsed())
      return run_builtin({{"check", "roundtrip"}, {"r", r}}, go);
    if (genus2->parsed())
      return finish(genus2_example(), go);
    if (vanish->parsed()) {
      Scenario sc = builtin_suite_scenario(1);
      sc.geom.ab.model_dimension = gdim;
      sc.seed = go.seed.value_or(0);
      sc.checks.push_back({{"check", "vanishing"}, {"r", r}});
      return finish(run_scenario(sc, RunOptions{go.seed, go.cases, go.quiet}), go);
    }
  } catch (const kfilt::Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code == Errc::ParseError || e.code == Errc::ValidationError) ? 2 : 1;
  }
  return 2;
}
