#ifndef BOOLCAT_SUITE_HPP
#define BOOLCAT_SUITE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "boolcat/catalog.hpp"
#include "boolcat/json_io.hpp"
#include "boolcat/morphism.hpp"

namespace boolcat {

enum class CatKind { SNet, ENet };

inline const char* cat_name(CatKind c) { return c == CatKind::SNet ? "snet" : "enet"; }

struct SamplerConfig {
  int bindings = 25;
  int max_depth = 2;
  int num_atoms = 2;
  std::uint64_t seed = 1;
};

struct EquationOutcome {
  std::string id;
  std::string level;
  bool skipped = false;
  bool expected_holds = true;
  int bindings_checked = 0;
  int unequal = 0;  // bindings where the two sides differed
  bool pass = false;
  std::string witness;  // first counterexample (or missing-witness note)
  std::string error;    // catalog defect: type error, unsatisfiable sampling
};

struct SuiteReport {
  std::string level;  // filter, or "all"
  CatKind cat = CatKind::SNet;
  SamplerConfig cfg;
  bool exhaustive = false;
  std::vector<EquationOutcome> results;

  bool ok() const;
};

SuiteReport run_suite(const std::vector<Equation>& catalog, const std::string& level,
                      CatKind cat, const SamplerConfig& cfg, bool exhaustive = false);

std::string report_table(const SuiteReport& r);
ordered_json report_json(const SuiteReport& r);

// Random generation used by the suite and by tests.
class Sampler {
 public:
  Sampler(std::uint64_t seed, int num_atoms, int max_depth);

  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  bool chance(int percent);
  Formula formula();
  Formula formula(int depth);
  // A correct simple-net arrow with free endpoints (forward random walk from
  // a sampled source), from a fixed source, into a fixed target, or at a
  // fixed type given a base arrow to perturb.
  Hom hom();
  Hom hom_from(const Formula& src);
  Hom hom_into(const Formula& tgt);
  Hom hom_mutate(const Hom& base);
  // nullopt-style: empty Hom sequent when no correct linking was found.
  bool hom_at(const Formula& src, const Formula& tgt, Hom& out);

  HomX lift_mutate(const Hom& h);  // extended-net variant with counts/anchors

 private:
  std::mt19937_64 rng_;
  int num_atoms_;
  int max_depth_;
};

}  // namespace boolcat

#endif
