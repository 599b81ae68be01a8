#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kfilt/scenario.hpp"

using namespace kfilt;

namespace {

std::string scenario_path(const std::string& name) {
  return std::string(KFILT_SCENARIO_DIR) + "/" + name;
}

RunOptions quick() {
  RunOptions opt;
  opt.cases = 5;
  opt.quiet = true;
  return opt;
}

}  // namespace

TEST_CASE("symbol expressions parse into balanced rows") {
  Scenario sc = load_scenario(scenario_path("example43.json"));
  SymbolDatum S = parse_symbol_expr(sc, "{(q1, a1), (0, a2)}@1");
  REQUIRE(S.r() == 2);
  CHECK(S.level == 1);
  REQUIRE(S.rows[0].z.size() == 1);
  const Divisor& D = S.rows[0].z[0];
  CHECK(sc.geom.div_degree(D) == 0);
  CHECK(D.coeff.at(1) == 1);   // the named point
  CHECK(D.coeff.at(0) == -1);  // balanced at the base point
  CHECK(sc.geom.ab.is_zero(S.rows[1].a) == false);
  // A zero curve entry yields an empty divisor.
  CHECK(S.rows[1].z[0].coeff.empty());

  SymbolDatum T = parse_symbol_expr(sc, "{(w2 - q1 + 0, a1 - a1)}@2");
  CHECK(T.level == 2);
  CHECK(T.rows[0].z[0].coeff.at(2) == 1);
  CHECK(T.rows[0].z[0].coeff.at(1) == -1);
  CHECK(sc.geom.ab.is_zero(T.rows[0].a));
}

TEST_CASE("malformed expressions raise parse errors") {
  Scenario sc = load_scenario(scenario_path("example43.json"));
  for (const char* bad : {
           "{(q1, a1)}",            // missing level
           "{(q1)}@1",              // too few entries per row
           "{(q1, a1, a2)}@1",      // too many entries per row
           "{(mystery, a1)}@1",     // unknown atom
           "{(a1, a1)}@1",          // abelian atom in a curve slot
           "{(q1, q1)}@1",          // curve atom in the abelian slot
           "(q1, a1)@1",            // missing braces
           "{(q1, a1)}@0",          // level must be positive
       }) {
    CHECK_THROWS_AS(parse_symbol_expr(sc, bad), Error);
    try {
      parse_symbol_expr(sc, bad);
    } catch (const Error& e) {
      CHECK(e.code == Errc::ParseError);
    }
  }
}

TEST_CASE("bundled random-suite scenario passes") {
  Scenario sc = load_scenario(scenario_path("roundtrip_random.json"));
  Report rep = run_scenario(sc, quick());
  for (const CheckResult& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.status != "fail");
  }
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
}

TEST_CASE("bundled worked-example scenario passes") {
  Scenario sc = load_scenario(scenario_path("example43.json"));
  Report rep = run_scenario(sc, quick());
  CHECK(rep.ok());
  CHECK(rep.unknown == 0);
}

TEST_CASE("bundled hyperelliptic scenario passes") {
  Scenario sc = load_scenario(scenario_path("genus2.json"));
  Report rep = run_scenario(sc, quick());
  CHECK(rep.ok());
  CHECK(rep.axiom_cited >= 1);  // one step is covered by the group-model axiom
}

TEST_CASE("bundled vanishing scenario passes") {
  Scenario sc = load_scenario(scenario_path("vanish.json"));
  Report rep = run_scenario(sc, quick());
  CHECK(rep.ok());
}

TEST_CASE("a broken trace table fails validation before any check runs") {
  Scenario sc = load_scenario(scenario_path("bad_trace_table.json"));
  CHECK_THROWS_AS(run_scenario(sc, quick()), Error);
  try {
    run_scenario(sc, quick());
  } catch (const Error& e) {
    CHECK(e.code == Errc::ValidationError);
  }
}

TEST_CASE("reports are byte-identical for a fixed scenario and seed") {
  Scenario sc = load_scenario(scenario_path("roundtrip_random.json"));
  RunOptions opt = quick();
  std::string first = report_to_json(run_scenario(sc, opt)).dump(2);
  std::string second = report_to_json(run_scenario(sc, opt)).dump(2);
  CHECK(first == second);

  opt.seed = 999;
  Report rep = run_scenario(sc, opt);
  CHECK(rep.seed == 999);
  CHECK(rep.ok());
}

TEST_CASE("an empty check list is a passing run") {
  Scenario sc = builtin_suite_scenario(1);
  Report rep = run_scenario(sc);
  CHECK(rep.ok());
  CHECK(rep.checks.empty());
}

TEST_CASE("unknown check names are rejected as configuration errors") {
  Scenario sc = builtin_suite_scenario(1);
  sc.checks.push_back({{"check", "frobnicate"}});
  CHECK_THROWS_AS(run_scenario(sc), Error);
  try {
    run_scenario(sc);
  } catch (const Error& e) {
    CHECK(e.code == Errc::ParseError);
  }
}

TEST_CASE("normal forms render stably") {
  Scenario sc = load_scenario(scenario_path("example43.json"));
  SymbolDatum S = parse_symbol_expr(sc, "{(q1, a1), (0, a2)}@1");
  std::string nf = to_string(sc.geom, datum_symbol(sc.geom, S));
  CHECK(nf == to_string(sc.geom, datum_symbol(sc.geom, S)));
  CHECK_FALSE(nf.empty());
}

TEST_CASE("the hyperelliptic worked example passes every step") {
  Report rep = genus2_example();
  for (const CheckResult& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.status != "fail");
  }
  CHECK(rep.ok());
  CHECK(rep.checks.size() >= 8);
}
