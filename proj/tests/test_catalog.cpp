#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "boolcat/suite.hpp"

using namespace boolcat;

TEST_CASE("the built-in catalog parses and is well-formed") {
  const auto& catalog = builtin_catalog();
  CHECK(catalog.size() > 80);
  std::set<std::string> ids;
  std::set<std::string> levels(catalog_levels().begin(), catalog_levels().end());
  for (const Equation& eq : catalog) {
    CAPTURE(eq.id);
    CHECK(ids.insert(eq.id).second);  // unique ids
    CHECK(levels.count(eq.level) == 1);
  }
  for (const std::string& level : catalog_levels()) {
    bool any = false;
    for (const Equation& eq : catalog) any = any || eq.level == level;
    CAPTURE(level);
    CHECK(any);
  }
}

TEST_CASE("every entry type-checks and runs on a few bindings") {
  SamplerConfig cfg;
  cfg.bindings = 3;
  cfg.seed = 17;
  for (CatKind cat : {CatKind::SNet, CatKind::ENet}) {
    SuiteReport r = run_suite(builtin_catalog(), "all", cat, cfg);
    for (const auto& e : r.results) {
      CAPTURE(e.id);
      CAPTURE(cat_name(cat));
      CHECK(e.error.empty());
      if (!e.skipped) CHECK(e.bindings_checked > 0);
    }
  }
}

TEST_CASE("spot checks of single equations") {
  SamplerConfig cfg;
  cfg.bindings = 5;
  cfg.seed = 23;
  auto one = [&](const std::string& id, CatKind cat) -> EquationOutcome {
    for (const Equation& eq : builtin_catalog()) {
      if (eq.id != id) continue;
      std::vector<Equation> single{eq};
      SuiteReport r = run_suite(single, "all", cat, cfg);
      REQUIRE(r.results.size() == 1);
      return r.results[0];
    }
    FAIL("missing equation ", id);
    return {};
  };

  CHECK(one("medial-diag", CatKind::SNet).pass);
  CHECK(one("b3c-medial-diag", CatKind::SNet).pass);
  CHECK(one("b3c-medial-diag", CatKind::ENet).pass);
  CHECK(one("delta-nabla", CatKind::SNet).pass);

  // In the extended category the pair is observed unequal, as expected.
  EquationOutcome dn = one("delta-nabla", CatKind::ENet);
  CHECK(dn.pass);
  CHECK(dn.unequal > 0);
  CHECK(!dn.witness.empty());

  EquationOutcome idem = one("id-plus-id", CatKind::ENet);
  CHECK(idem.pass);
  CHECK(idem.unequal > 0);

  CHECK(one("loopkill", CatKind::SNet).pass);
  CHECK(one("loopkill", CatKind::ENet).pass);
  CHECK(one("lk-pi", CatKind::SNet).pass);
  CHECK(one("lk-delta", CatKind::SNet).pass);
  CHECK(one("lk-pi", CatKind::ENet).skipped);
  CHECK(one("unique-unit", CatKind::SNet).pass);
  CHECK(one("unique-unit", CatKind::ENet).pass);
  CHECK(one("mckinley", CatKind::SNet).pass);
  CHECK(one("mckinley", CatKind::ENet).pass);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SamplerConfig cfg;
  cfg.bindings = 4;
  cfg.seed = 99;
  SuiteReport a = run_suite(builtin_catalog(), "B1", CatKind::SNet, cfg);
  SuiteReport b = run_suite(builtin_catalog(), "B1", CatKind::SNet, cfg);
  CHECK(report_json(a).dump() == report_json(b).dump());
  cfg.seed = 100;
  SuiteReport c = run_suite(builtin_catalog(), "B1", CatKind::SNet, cfg);
  CHECK(report_json(a).dump() != report_json(c).dump());
}

TEST_CASE("catalog text parse errors are reported") {
  CHECK_THROWS(parse_catalog("(eq broken (level B1))"));
  CHECK_THROWS(parse_catalog("(something-else)"));
}
