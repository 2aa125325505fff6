#pragma once

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

#include "oforge/graph.hpp"
#include "oforge/lincomb.hpp"
#include "oforge/rowspace.hpp"

namespace oforge {

// Binary generators of the free operad: p (two points), s (segment), and
// their duals. p and s are symmetric; the duals carry the sign action, so a
// transposition of a dual generator's two labels acts by -1.
enum class GenSym : std::uint8_t { p = 0, s = 1, p_dual = 2, s_dual = 3 };

bool is_dual(GenSym g);
GenSym dual_of(GenSym g);  // p <-> p_dual, s <-> s_dual
char gen_char(GenSym g);
std::string gen_name(GenSym g);  // "p", "s", "p*", "s*"
GenSym gen_from_name(const std::string& name);

// A leaf-labelled binary tree whose internal nodes carry generator symbols.
// Children are stored in canonical (key) order; generator families are never
// mixed inside one tree.
class EnrichedTree {
 public:
  struct Node {
    bool leaf = true;
    Label label;               // when leaf
    GenSym gen = GenSym::p;    // when internal
    std::vector<Node> children;
  };

  EnrichedTree() = default;

  static EnrichedTree make_leaf(const Label& l);
  static EnrichedTree make_node(GenSym g, const EnrichedTree& left, const EnrichedTree& right);

  const Node& root() const { return root_; }
  std::vector<Label> leaves() const;  // sorted
  int arity() const;
  int internal_nodes() const;
  bool dual() const;  // true if the (homogeneous) generator family is dual

  const std::string& key() const { return key_; }
  std::string to_text() const;

  bool operator<(const EnrichedTree& o) const { return key_ < o.key_; }
  bool operator==(const EnrichedTree& o) const { return key_ == o.key_; }
  bool operator!=(const EnrichedTree& o) const { return key_ != o.key_; }

 private:
  Node root_;
  std::string key_;
};

using TreePoly = LinComb<EnrichedTree>;

// Grafts t2 onto the leaf `star` of t1.
EnrichedTree free_compose(const EnrichedTree& t1, const Label& star, const EnrichedTree& t2);
TreePoly free_compose(const TreePoly& x, const Label& star, const TreePoly& y);

// Transport along a leaf bijection. Dual trees pick up the sign of the
// bijection (computed between the sorted leaf lists); primal trees do not.
// This is the unique extension of the generators' sign action under which
// the grafting pairing below is sign-equivariant, which the worked
// orthogonality computations pin down.
TreePoly act(const std::map<Label, Label>& sigma, const EnrichedTree& t);
TreePoly act(const std::map<Label, Label>& sigma, const TreePoly& w);

int sign_of(const std::map<Label, Label>& sigma, const std::vector<Label>& domain);

// All enriched trees on the given leaves over one generator family.
std::vector<EnrichedTree> enumerate_trees(const std::vector<Label>& leaves, bool dual);
// Trees with exactly two internal nodes (weight-2 component at arity 3).
std::vector<EnrichedTree> enumerate_weight2(const std::vector<Label>& leaves, bool dual);

// The grafting pairing <f1 o f2, x1 o x2> = f1(x1) f2(x2) between dual and
// primal weight-2 trees on one 3-element leaf set. Basis elements pair to 1
// exactly when the leaf partitions agree and each generator faces its dual.
Rational koszul_pairing(const TreePoly& dual_side, const TreePoly& primal_side);

// Span of all symmetric-group translates of arity-3 homogeneous relations.
RowSpace<EnrichedTree> relation_space(const std::vector<TreePoly>& relations);

// Annihilator of R inside the dual weight-2 component; dim R + dim out = 12.
std::vector<TreePoly> orthogonal(const RowSpace<EnrichedTree>& R, const std::vector<Label>& leaves);

// Quadratic relations of the suboperad generated by the segment and the two
// points, and the orthogonal relations on the dual generators.
std::vector<TreePoly> sp_relations(const Label& a, const Label& b, const Label& c);
std::vector<TreePoly> sp_dual_relations(const Label& a, const Label& b, const Label& c);

// Arity-n component of the operad ideal generated by arity-3 relations,
// built one grafted generator at a time. Usable through modest arities.
RowSpace<EnrichedTree> ideal_span(const std::vector<TreePoly>& relations, int arity);

// JSON wire format: {"gen":"s","children":[{"leaf":"a"}, ...]}, duals as
// "p*"/"s*". An optional "sign" of -1 on a dual node is folded into the
// term's coefficient; canonical output never emits it.
nlohmann::json tree_to_json(const EnrichedTree& t);
std::pair<EnrichedTree, Rational> tree_from_json(const nlohmann::json& j);
nlohmann::json tree_poly_to_json(const TreePoly& w);
TreePoly tree_poly_from_json(const nlohmann::json& j);

}  // namespace oforge
