#pragma once

#include <map>

#include "oforge/graph.hpp"

namespace oforge {

// Spanning-tree orientations inside rooted oriented multigraphs.

// (g oriented by t rooted at r, pointed at r).
Mhg st_element(const Mhg& g, const Mhg& t, const Label& r);

// Sum over all roots of g with one spanning-tree choice per root.
GraphComb o1_element(const Mhg& g, const std::map<Label, Mhg>& tree_for_root);

// Difference of two spanning-tree orientations at the same root.
GraphComb o2_element(const Mhg& g, const Mhg& t1, const Mhg& t2, const Label& r);

// Forgets end labels, keeps the root.
GraphComb u_times_id(const GraphComb& w);

}  // namespace oforge
