#pragma once

#include <map>
#include <string>
#include <vector>

#include "oforge/graph.hpp"
#include "oforge/lincomb.hpp"

namespace oforge {

// A rooted tree on labelled vertices, stored as a parent map.
class RootedTree {
 public:
  RootedTree() = default;

  static RootedTree make(std::vector<Label> vertices, Label root, std::map<Label, Label> parent);

  const std::vector<Label>& vertices() const { return vertices_; }
  const Label& root() const { return root_; }
  const std::map<Label, Label>& parent() const { return parent_; }
  int arity() const { return static_cast<int>(vertices_.size()); }
  bool has_vertex(const Label& v) const;
  std::vector<Label> children(const Label& v) const;

  const std::string& key() const { return key_; }
  std::string to_text() const;

  bool operator<(const RootedTree& o) const { return key_ < o.key_; }
  bool operator==(const RootedTree& o) const { return key_ == o.key_; }
  bool operator!=(const RootedTree& o) const { return key_ != o.key_; }

 private:
  std::vector<Label> vertices_;
  Label root_;
  std::map<Label, Label> parent_;  // defined on vertices != root
  std::string key_;
};

using TreeComb = LinComb<RootedTree>;

RootedTree tree_unit(const Label& v);
RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& sigma);

// Roots a plain tree at r.
RootedTree root_tree(const Mhg& tree, const Label& r);

// The pre-Lie partial composition: the inserted tree hangs under star's
// parent, and each child of star reattaches to any vertex of t2.
TreeComb plie_compose(const RootedTree& t1, const Label& star, const RootedTree& t2);
TreeComb plie_compose(const TreeComb& x, const Label& star, const TreeComb& y);

// Sum of t rooted at each of its vertices.
TreeComb psi(const Mhg& tree);

// Embedding into rooted oriented multigraphs: arrows on parent-side ends.
Mhg rooted_tree_to_graph(const RootedTree& t);
GraphComb rooted_tree_to_graph(const TreeComb& w);
RootedTree rooted_tree_from_graph(const Mhg& g);

}  // namespace oforge
