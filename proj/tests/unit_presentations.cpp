#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oforge/closure.hpp"
#include "oforge/error.hpp"
#include "oforge/free_operad.hpp"

using namespace oforge;

namespace {

EnrichedTree leaf(const Label& l) { return EnrichedTree::make_leaf(l); }
EnrichedTree node(GenSym g, const EnrichedTree& a, const EnrichedTree& b) {
  return EnrichedTree::make_node(g, a, b);
}

}  // namespace

TEST_CASE("grafting onto a corolla") {
  EnrichedTree corolla = node(GenSym::p, leaf("c"), leaf("*"));
  EnrichedTree inner = node(GenSym::p, leaf("a"), leaf("b"));
  EnrichedTree grafted = free_compose(corolla, "*", inner);
  CHECK(grafted.internal_nodes() == 2);
  CHECK(grafted.arity() == 3);
  CHECK(grafted == node(GenSym::p, leaf("c"), inner));

  EnrichedTree seg_graft = free_compose(node(GenSym::s, leaf("a"), leaf("*")), "*",
                                        node(GenSym::p, leaf("b"), leaf("c")));
  CHECK(seg_graft == node(GenSym::s, leaf("a"), node(GenSym::p, leaf("b"), leaf("c"))));

  CHECK_THROWS_AS(free_compose(corolla, "z", inner), Error);
  CHECK_THROWS_AS(free_compose(corolla, "*", node(GenSym::p, leaf("c"), leaf("d"))), Error);
}

TEST_CASE("free composition satisfies the operad diagrams") {
  std::mt19937_64 rng(23);
  auto random_tree = [&](const std::vector<Label>& leaves) {
    auto all = enumerate_trees(leaves, false);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  };
  for (int trial = 0; trial < 60; ++trial) {
    EnrichedTree x = random_tree({"*1", "a1", "a2"});
    EnrichedTree y = random_tree({"*2", "b1"});
    EnrichedTree z = random_tree({"c1", "c2"});
    CHECK(free_compose(free_compose(x, "*1", y), "*2", z) ==
          free_compose(x, "*1", free_compose(y, "*2", z)));

    EnrichedTree w = random_tree({"*1", "*2", "a1"});
    EnrichedTree y_plain = random_tree({"b1", "b2"});
    CHECK(free_compose(free_compose(w, "*1", y_plain), "*2", z) ==
          free_compose(free_compose(w, "*2", z), "*1", y_plain));
  }
}

TEST_CASE("weight-2 component has dimension 12") {
  CHECK(enumerate_weight2({"a", "b", "c"}, false).size() == 12);
  CHECK(enumerate_weight2({"a", "b", "c"}, true).size() == 12);
  CHECK(enumerate_trees({"a", "b", "c", "d"}, false).size() == 120);
  CHECK(enumerate_trees({"a", "b", "c", "d", "e"}, false).size() == 1680);
}

TEST_CASE("relation spans") {
  CHECK(relation_space(sp_relations("a", "b", "c")).rank() == 5);
  CHECK(relation_space(sp_dual_relations("a", "b", "c")).rank() == 7);
  CHECK(relation_space({}).rank() == 0);
}

TEST_CASE("pairing worked computations") {
  auto rels = sp_relations("a", "b", "c");
  auto duals = sp_dual_relations("a", "b", "c");
  CHECK(koszul_pairing(duals[0], rels[0]) == 0);

  // The cyclic translate pairs against the second relation through a
  // -1 / +1 cancellation.
  std::map<Label, Label> abc{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  TreePoly translated = act(abc, duals[1]);
  CHECK(koszul_pairing(translated, rels[1]) == 0);
  // The two nonvanishing basis products in that computation.
  TreePoly pb_sca = TreePoly::basis(node(GenSym::p_dual, leaf("b"),
                                         node(GenSym::s_dual, leaf("a"), leaf("c"))));
  TreePoly pb_sca_primal =
      TreePoly::basis(node(GenSym::p, leaf("b"), node(GenSym::s, leaf("a"), leaf("c"))));
  CHECK(koszul_pairing(pb_sca, rels[1]) == -1);
  CHECK(koszul_pairing(pb_sca, pb_sca_primal) == 1);

  TreePoly sa_pbc = TreePoly::basis(node(GenSym::s_dual, leaf("a"),
                                         node(GenSym::p_dual, leaf("b"), leaf("c"))));
  CHECK(koszul_pairing(sa_pbc, rels[1]) == 1);

  // Matched and mismatched generators.
  TreePoly s_s = TreePoly::basis(node(GenSym::s, leaf("a"), node(GenSym::s, leaf("b"), leaf("c"))));
  TreePoly s_s_dual =
      TreePoly::basis(node(GenSym::s_dual, leaf("a"), node(GenSym::s_dual, leaf("b"), leaf("c"))));
  TreePoly p_s = TreePoly::basis(node(GenSym::p, leaf("a"), node(GenSym::s, leaf("b"), leaf("c"))));
  CHECK(koszul_pairing(s_s_dual, s_s) == 1);
  CHECK(koszul_pairing(s_s_dual, p_s) == 0);

  CHECK_THROWS_AS(koszul_pairing(s_s, s_s), Error);         // left side must be dual
  CHECK_THROWS_AS(koszul_pairing(s_s_dual, TreePoly::basis(node(
                      GenSym::p, leaf("a"), node(GenSym::p, leaf("b"), leaf("d"))))),
                  Error);  // mismatched leaf sets
}

TEST_CASE("dual transport carries the sign of the bijection") {
  EnrichedTree t = node(GenSym::s_dual, leaf("a"), node(GenSym::s_dual, leaf("b"), leaf("c")));
  std::map<Label, Label> swap_bc{{"a", "a"}, {"b", "c"}, {"c", "b"}};
  TreePoly image = act(swap_bc, t);
  REQUIRE(image.size() == 1);
  CHECK(image.terms().begin()->second == -1);
  CHECK(image.terms().begin()->first == t);  // same unordered tree

  // Primal trees transport without signs.
  EnrichedTree tp = node(GenSym::s, leaf("a"), node(GenSym::s, leaf("b"), leaf("c")));
  CHECK(act(swap_bc, tp) == TreePoly::basis(tp));

  // Composition law of the signed action.
  std::map<Label, Label> cycle{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  std::map<Label, Label> composed;
  for (const auto& [k, v] : cycle) composed[k] = swap_bc.at(v);
  CHECK(act(composed, t) == act(swap_bc, act(cycle, t)));
}

TEST_CASE("orthogonal complement of the relation span") {
  auto I = relation_space(sp_relations("a", "b", "c"));
  auto ortho = orthogonal(I, {"a", "b", "c"});
  CHECK(ortho.size() == 7);

  auto J = relation_space(sp_dual_relations("a", "b", "c"));
  RowSpace<EnrichedTree> span;
  for (const auto& v : ortho) span.insert(v);
  CHECK(span.rank() == 7);
  for (const auto& v : J.basis()) CHECK(span.contains(v));
  for (const auto& v : ortho) CHECK(J.contains(v));

  RowSpace<EnrichedTree> full;
  for (const auto& t : enumerate_weight2({"a", "b", "c"}, false))
    full.insert(TreePoly::basis(t));
  CHECK(orthogonal(full, {"a", "b", "c"}).empty());
}

TEST_CASE("quotient dimensions match the span-engine closure") {
  auto rels = sp_relations("a", "b", "c");
  ClosureConfig cfg;
  cfg.max_arity = 5;
  ClosureTable sp = closure(operad_instance("g"),
                            {GraphComb::basis(empty_graph({"a", "b"})),
                             GraphComb::basis(simple_graph({"a", "b"}, {{"a", "b"}}))},
                            cfg);
  auto dims = sp.dims();
  for (int n = 3; n <= 5; ++n) {
    std::size_t free_dim = enumerate_trees(canonical_labels(n), false).size();
    std::size_t ideal_dim = ideal_span(rels, n).rank();
    CHECK(free_dim - ideal_dim == dims[static_cast<std::size_t>(n - 1)]);
  }
}
