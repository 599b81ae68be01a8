#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "kfilt/random_inputs.hpp"

namespace kfilt {

// A named generator usable in symbol expressions: either a catalog point
// on one curve or one generator of the abelian model.
struct AtomRef {
  bool is_ab = false;
  int curve = 0;
  int index = 0;
};

struct NamedInput {
  std::string name;
  SymbolDatum datum;
};

struct Scenario {
  std::string name;
  Geometry geom;
  std::map<std::string, AtomRef> atoms;
  std::vector<NamedInput> inputs;
  nlohmann::json checks = nlohmann::json::array();
  std::uint64_t seed = 0;
  std::vector<Level> levels;  // configured level pool

  const SymbolDatum& input(const std::string& name) const;
};

Scenario scenario_from_json(const nlohmann::json& j, const std::string& name);
Scenario load_scenario(const std::string& path);

// Parse `{(entry,...,entry), ...}@level` where each row lists one entry per
// curve followed by one abelian entry, and entries are signed sums of atom
// names and 0.
SymbolDatum parse_symbol_expr(const Scenario& sc, const std::string& expr);

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | axiom-cited | unknown
  std::vector<std::string> detail;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  int axiom_cited = 0;
  int unknown = 0;
  bool ok() const { return failed == 0; }

  void add(CheckResult r);
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> cases;
  bool quiet = false;
};

// A scenario over the built-in random-suite geometry with an empty check
// list; callers fill in `checks`.
Scenario builtin_suite_scenario(int d);

Report run_scenario(const Scenario& sc, const RunOptions& opt = {});

nlohmann::json report_to_json(const Report& rep);
std::string report_text(const Report& rep);

// The bundled genus-2 scenario: hyperelliptic catalog with involution,
// Weierstrass base point, and the Jacobian as the abelian factor.
Geometry genus2_geometry();
Report genus2_example();

}  // namespace kfilt
