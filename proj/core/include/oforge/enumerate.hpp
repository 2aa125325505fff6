#pragma once

#include <random>
#include <vector>

#include "oforge/graph.hpp"
#include "oforge/operad.hpp"
#include "oforge/plie.hpp"

namespace oforge {

using Rng = std::mt19937_64;

// All multigraphs on the given vertices with at most max_edges edge units.
// With oriented=true, every {plain, arrow} end labelling is produced.
std::vector<Mhg> enumerate_multigraphs(const std::vector<Label>& verts, int max_edges,
                                       bool oriented);

// All 2^C(n,2) simple graphs.
std::vector<Mhg> enumerate_simple_graphs(const std::vector<Label>& verts);

// All n^(n-2) labelled trees.
std::vector<Mhg> enumerate_trees(const std::vector<Label>& verts);

std::vector<RootedTree> enumerate_rooted_trees(const std::vector<Label>& verts);

// Bounded exhaustive carrier listing for an operad instance (root choices
// included for pointed instances).
std::vector<Mhg> enumerate_carrier(const OperadInstance& op, const std::vector<Label>& verts,
                                   int max_edges);

Mhg random_tree(const std::vector<Label>& verts, Rng& rng);
RootedTree random_rooted_tree(const std::vector<Label>& verts, Rng& rng);
Mhg random_connected_multigraph(const std::vector<Label>& verts, Rng& rng, int extra_edges);
Mhg random_carrier(const OperadInstance& op, const std::vector<Label>& verts, Rng& rng,
                   int max_edges);

}  // namespace oforge
