#pragma once

#include <map>
#include <string>
#include <vector>

#include "oforge/graph.hpp"

namespace oforge {

// How ends that were attached to the removed vertex reconnect into the right
// operand: either to every vertex (summed) or to the root alone.
enum class EndPolicy { sum_all_vertices, root_vertex };

struct OperadInstance {
  std::string name;
  std::string description;
  bool oriented = false;
  bool rooted = false;
  std::map<EndSym, EndPolicy> policy;
  bool (*carrier)(const Mhg&) = nullptr;

  bool in_carrier(const Mhg& g) const { return carrier(g); }
};

// Built-in instances: mg, g, gc, mgc, t, gpointed, mgor.
const OperadInstance& operad_instance(const std::string& name);
std::vector<std::string> operad_names();

// The operadic unit on one vertex (rooted at it for pointed instances).
Mhg operad_unit(const OperadInstance& op, const Label& v);

// Partial composition x o_star y, extended bilinearly. Support graphs must
// lie in the carrier, star must occur in every support of x, and the vertex
// sets may only meet in star.
GraphComb compose(const OperadInstance& op, const GraphComb& x, const Label& star,
                  const GraphComb& y);
GraphComb compose(const OperadInstance& op, const Mhg& x, const Label& star, const Mhg& y);

}  // namespace oforge
