#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oforge/closure.hpp"

namespace oforge {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Named verification suites. All output is deterministic for a fixed seed.
SuiteResult verify_axioms(std::uint64_t seed);
SuiteResult verify_nonfree();
SuiteResult verify_prelie();
SuiteResult verify_lemmfond(std::uint64_t seed);
SuiteResult verify_koszul();
SuiteResult verify_hilbert();
SuiteResult verify_lp();
SuiteResult verify_threshold();

std::vector<std::string> verify_suite_names();
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed);

// Closure dimension checks (commutative family, magma family, both combined)
// against the exact generating-function oracles.
SuiteResult verify_dimensions();

// Generator reports for the simple-graph and tree operads at low arity.
struct GeneratorScan {
  std::vector<GeneratorReport> graph_reports;  // arities 2..graph_max
  std::vector<GeneratorReport> tree_reports;   // arities 2..tree_max
};
GeneratorScan scan_generators(int graph_max, int tree_max);
SuiteResult verify_generators();

}  // namespace oforge
