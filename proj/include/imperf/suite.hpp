#ifndef IMPERF_SUITE_HPP
#define IMPERF_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace imperf {

/// Configuration for a verification suite run.
struct SuiteConfig {
  std::string suite = "all";    // pindep | kollar | cubic2 | all
  uint32_t p = 3;               // characteristic for the degree-p family
  uint32_t n = 1;               // number of scalars for the degree-p family
  uint32_t point_degree = 2;    // degree bound for the point search
  uint64_t budget = 10'000'000; // candidate budget for exhaustive searches
  uint64_t seed = 0;            // seed for randomized spot checks
  std::string format = "json";  // json | md
  bool timings = false;         // include wall times (breaks byte-identity)
  std::string field;            // field preset for --elems, e.g. "field GF(3)(t1,t2)"
  std::vector<std::string> elems;  // extra elements for the pindep suite
};

struct CheckResult {
  std::string name;
  std::string anchor;   // claim identifier from the anchor inventory
  std::string status;   // pass | fail | skipped
  nlohmann::ordered_json witness;
  std::string reason;   // for skipped checks
  double wall_ms = 0.0;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;
  std::string tool = "verify 1.0.0";

  bool all_passed() const;
};

/// Execute the configured suite. Checks run in declared order; randomized
/// spot checks draw from a generator seeded only by config.seed, so a report
/// is a pure function of its configuration. Throws ConfigError for unknown
/// suites or malformed inputs.
Report run_suite(const SuiteConfig& cfg);

/// Render a report as canonical JSON ("json") or markdown ("md"). Identical
/// (config, seed) produce byte-identical output unless timings are enabled.
std::string emit_report(const Report& report, const std::string& format);

/// The claim identifiers every check must map into; kept as a fixture so
/// coverage of the in-scope claims is itself testable.
const std::vector<std::string>& anchor_inventory();

}  // namespace imperf

#endif
