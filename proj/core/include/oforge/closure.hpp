#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oforge/operad.hpp"
#include "oforge/rowspace.hpp"

namespace oforge {

// Worker count for composition sweeps; OPERAD_FORGE_THREADS caps it.
// Results are deterministic regardless of the value.
unsigned worker_count(unsigned requested = 0);

struct ClosureConfig {
  int max_arity = 6;
  bool unsafe_arity = false;  // permit max_arity > 6
  // Edge-unit cap per basis vector. Required when the carrier is infinite at
  // fixed arity (multigraph instances with arity-1 generators); compositions
  // exceeding it are not taken, which is sound because composition adds edge
  // counts and the tracked spans stay edge-homogeneous.
  std::optional<int> max_edges;
  unsigned threads = 0;
};

// Per-arity spans of the suboperad generated by a family, kept closed under
// the symmetric group action.
class ClosureTable {
 public:
  ClosureTable(const OperadInstance& op, ClosureConfig cfg);

  const OperadInstance& op() const { return *op_; }
  const ClosureConfig& config() const { return cfg_; }
  int max_arity() const { return cfg_.max_arity; }

  RowSpace<Mhg>& span(int arity);
  const RowSpace<Mhg>& span(int arity) const;
  std::vector<std::size_t> dims() const;  // index 0 = arity 1

 private:
  const OperadInstance* op_;
  ClosureConfig cfg_;
  std::vector<RowSpace<Mhg>> spans_;
};

// Arity-ascending fixpoint closure of the generated suboperad.
ClosureTable closure(const OperadInstance& op, const std::vector<GraphComb>& generators,
                     ClosureConfig cfg = {});

// True iff v lies in the closure span at its arity (after canonical
// relabelling; spans are symmetric-group closed).
bool membership(const ClosureTable& table, const GraphComb& v);

struct GeneratorShape {
  std::string shape;   // isomorphism-class key
  Mhg representative;  // canonically labelled witness
  int edges = 0;
  std::size_t rank_gain = 0;  // dimensions its orbit added
};

struct GeneratorReport {
  int arity = 0;
  std::size_t ambient_dim = 0;
  std::size_t composable_rank = 0;
  std::vector<GeneratorShape> shapes;
  bool minimal = false;  // removal test over the picked shapes

  std::size_t generator_dim() const { return ambient_dim - composable_rank; }
};

// Full carrier basis at a given arity, on canonical labels.
using AmbientEnum = std::function<std::vector<Mhg>(int)>;
AmbientEnum ambient_simple_graphs();
AmbientEnum ambient_trees();

// Reports the generators of the full operad at arity n: the composable span
// from the lower arities is completed greedily by ambient shapes (ascending
// edge count, then shape key). The table must hold the full ambient spans
// through arity n-1 and is extended in place with the completed arity-n span.
GeneratorReport generator_search(ClosureTable& table, const AmbientEnum& ambient, int n);

}  // namespace oforge
