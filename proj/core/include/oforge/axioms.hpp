#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oforge/operad.hpp"

namespace oforge {

struct AxiomConfig {
  // Exhaustive part: every carrier element on the canonical label sets, with
  // per-operand arity caps and an edge-unit cap (the carriers of multigraph
  // instances are infinite without one).
  int exhaustive_x_arity = 3;
  int exhaustive_y_arity = 3;
  int exhaustive_z_arity = 2;
  int exhaustive_max_edges = 2;
  // Randomised part: cases are triples whose final composite has at most
  // random_total_vertices vertices.
  int random_cases = 500;
  int random_total_vertices = 5;
  int random_max_edges = 3;
  std::uint64_t seed = 1;
};

struct AxiomReport {
  long sequential = 0;
  long parallel = 0;
  long left_units = 0;
  long right_units = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  long total_checks() const { return sequential + parallel + left_units + right_units; }
};

// Verifies both composition diagrams and both unit laws for a graph operad
// instance, exhaustively on small carriers and on random triples.
AxiomReport check_axioms(const OperadInstance& op, const AxiomConfig& cfg);

// Same checks for the rooted-tree operad with the pre-Lie composition.
AxiomReport check_axioms_plie(const AxiomConfig& cfg);

}  // namespace oforge
