#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oforge/lincomb.hpp"
#include "oforge/rational.hpp"

namespace oforge {

using Label = std::string;

// End decorations. Plain graphs use only `plain`; oriented multigraphs use
// the two-symbol alphabet {plain, arrow} ("_" and ">").
enum class EndSym : std::uint8_t { plain = 0, arrow = 1 };

inline char end_sym_char(EndSym s) { return s == EndSym::plain ? '_' : '>'; }

struct End {
  Label v;
  EndSym sym = EndSym::plain;
  auto operator<=>(const End&) const = default;
};

// One edge of a multi-hypergraph, i.e. one monomial of the polynomial
// encoding: a multiset of (vertex, end symbol) units. A multigraph edge has
// total degree exactly 2.
struct Edge {
  std::vector<std::pair<End, int>> ends;  // sorted, multiplicities > 0

  int degree() const;
  bool incident_to(const Label& v) const;
  bool is_loop() const;  // degree 2, both units on the same vertex
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(std::vector<End> units);
Edge plain_edge(const Label& a, const Label& b);  // loop when a == b

// A multi-hypergraph over a finite vertex set, optionally end-labelled
// (oriented) and optionally pointed at a root vertex. Values are immutable
// after construction and carry a cached canonical byte key; the key order is
// the ambient basis order used by every row space.
class Mhg {
 public:
  Mhg() = default;

  static Mhg make(std::vector<Label> vertices, std::vector<std::pair<Edge, int>> edges,
                  bool oriented = false, std::optional<Label> root = std::nullopt);

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<std::pair<Edge, int>>& edges() const { return edges_; }
  bool oriented() const { return oriented_; }
  const std::optional<Label>& root() const { return root_; }

  int arity() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const;  // number of edge units (multiplicities counted)
  bool has_vertex(const Label& v) const;

  bool is_multigraph() const;  // every edge has degree 2
  bool is_graph() const;       // multigraph, loop-free, all multiplicities 1
  bool is_forest() const;
  bool is_tree() const;
  bool is_connected() const;

  Mhg with_root(std::optional<Label> r) const;

  const std::string& key() const { return key_; }
  std::string to_text() const;  // compact polynomial-style rendering

  bool operator<(const Mhg& o) const { return key_ < o.key_; }
  bool operator==(const Mhg& o) const { return key_ == o.key_; }
  bool operator!=(const Mhg& o) const { return key_ != o.key_; }

 private:
  std::vector<Label> vertices_;
  std::vector<std::pair<Edge, int>> edges_;
  bool oriented_ = false;
  std::optional<Label> root_;
  std::string key_;
};

using GraphComb = LinComb<Mhg>;

// Convenience builders.
Mhg empty_graph(std::vector<Label> vertices, bool oriented = false,
                std::optional<Label> root = std::nullopt);
Mhg simple_graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges,
                 std::optional<Label> root = std::nullopt);
Mhg multigraph(std::vector<Label> vertices,
               const std::vector<std::pair<std::pair<Label, Label>, int>>& edges,
               std::optional<Label> root = std::nullopt);

// Species transport along a bijection of vertex sets. sigma must be total and
// injective on g's vertices.
Mhg relabel(const Mhg& g, const std::map<Label, Label>& sigma);
GraphComb relabel(const GraphComb& w, const std::map<Label, Label>& sigma);

std::map<Label, Label> bijection(const std::vector<Label>& from, const std::vector<Label>& to);
std::vector<Label> canonical_labels(int n);  // "1", "2", ..., "n"

// Isomorphism-class key by brute-force minimisation over all relabelings onto
// {1..n}. Bounded to n <= 8.
std::string shape_key(const Mhg& g);

// Multiset of neighbours across non-loop edges and number of loops at v.
// Requires a multigraph.
std::vector<Label> neighbors(const Mhg& g, const Label& v);
int loop_count(const Mhg& g, const Label& v);

// All spanning trees of a connected multigraph, as plain subgraphs on the full
// vertex set. Parallel edges give one entry per instance, so the returned
// list may contain equal trees.
std::vector<Mhg> spanning_trees(const Mhg& g);

// Orients g by the spanning tree t rooted at r: each tree edge gets an arrow
// on its parent-side end, every non-tree end gets an arrow.
Mhg orient_by_tree(const Mhg& g, const Mhg& t, const Label& r);

// Forgets all end labels (the map U). Keeps the root, if any.
Mhg forget_orientation(const Mhg& g);
GraphComb forget_orientation(const GraphComb& w);

// Replacement data for one end symbol: a linear combination of single
// vertices of the tail graph.
using EndReplacement = std::vector<std::pair<Label, Rational>>;

// Distributive substitution of the distinguished vertex `star`.
//
// Every unit of every edge incident to star is replaced independently by one
// term of the replacement combination for its end symbol (the replaced end
// keeps its symbol), coefficients multiply, untouched edges are kept and the
// tail's edges are unioned in. The result lives on (g.vertices - star) u
// tail.vertices and carries no root.
GraphComb substitute(const Mhg& g, const Label& star,
                     const std::map<EndSym, EndReplacement>& repl, const Mhg& tail);

}  // namespace oforge
