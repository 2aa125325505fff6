#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oforge/enumerate.hpp"
#include "oforge/error.hpp"
#include "oforge/graph.hpp"

using namespace oforge;

namespace {

std::map<Label, Label> perm_map(const std::vector<Label>& from, const std::vector<Label>& to) {
  return bijection(from, to);
}

// Independent isomorphism oracle: exhaustive search for an edge-preserving
// bijection, used to cross-check shape_key.
bool isomorphic_bruteforce(const Mhg& a, const Mhg& b) {
  if (a.arity() != b.arity() || a.edge_count() != b.edge_count()) return false;
  std::vector<Label> target = b.vertices();
  std::sort(target.begin(), target.end());
  do {
    if (relabel(a, bijection(a.vertices(), target)).edges() == b.edges()) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

}  // namespace

TEST_CASE("relabel examples") {
  Mhg e = simple_graph({"a", "b"}, {{"a", "b"}});
  CHECK(relabel(e, perm_map({"a", "b"}, {"a", "b"})) == e);
  CHECK(relabel(e, perm_map({"a", "b"}, {"b", "a"})) == e);  // the monomial is symmetric
  Mhg loop = multigraph({"a"}, {{{"a", "a"}, 1}});
  CHECK(relabel(loop, perm_map({"a"}, {"c"})) == multigraph({"c"}, {{{"c", "c"}, 1}}));
  CHECK_THROWS_AS(relabel(e, std::map<Label, Label>{{"a", "c"}}), Error);
  CHECK_THROWS_AS(relabel(e, std::map<Label, Label>{{"a", "c"}, {"b", "c"}}), Error);
}

TEST_CASE("relabel is a group action") {
  auto verts = std::vector<Label>{"a", "b", "c"};
  auto graphs = enumerate_multigraphs(verts, 2, false);
  std::vector<Label> p1 = verts, p2 = verts;
  std::sort(p1.begin(), p1.end());
  do {
    std::sort(p2.begin(), p2.end());
    do {
      auto sigma = perm_map(verts, p1);
      auto tau = perm_map(verts, p2);
      std::map<Label, Label> composed;
      for (const auto& v : verts) composed[v] = sigma.at(tau.at(v));
      for (const auto& g : graphs)
        CHECK(relabel(g, composed) == relabel(relabel(g, tau), sigma));
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
}

TEST_CASE("shape keys decide isomorphism") {
  Mhg path1 = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Mhg path2 = simple_graph({"a", "b", "c"}, {{"b", "a"}, {"a", "c"}});
  CHECK(shape_key(path1) == shape_key(path2));

  Mhg triangle = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(shape_key(triangle) != shape_key(path1));

  // The two 5-vertex, 5-edge generator shapes are genuinely distinct.
  Mhg g1 = simple_graph({"a", "b", "c", "d", "e"},
                        {{"a", "b"}, {"a", "c"}, {"a", "e"}, {"b", "d"}, {"b", "e"}});
  Mhg g2 = simple_graph({"a", "b", "c", "d", "e"},
                        {{"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "d"}, {"b", "e"}});
  CHECK_FALSE(isomorphic_bruteforce(g1, g2));
  CHECK(shape_key(g1) != shape_key(g2));

  // Cross-check against the brute-force oracle on all pairs of small graphs.
  auto graphs = enumerate_simple_graphs({"a", "b", "c", "d"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int i = 0; i < 150; ++i) {
    const Mhg& a = graphs[pick(rng)];
    const Mhg& b = graphs[pick(rng)];
    CHECK((shape_key(a) == shape_key(b)) == isomorphic_bruteforce(a, b));
  }
}

TEST_CASE("shape key rejects large vertex sets") {
  std::vector<Label> big;
  for (int i = 0; i < 9; ++i) big.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(shape_key(empty_graph(big)), Error);
}

TEST_CASE("neighbors and loop counts") {
  Mhg dbl = multigraph({"a", "b"}, {{{"a", "b"}, 2}});
  CHECK(neighbors(dbl, "a") == std::vector<Label>{"b", "b"});
  CHECK(loop_count(dbl, "a") == 0);

  Mhg loop = multigraph({"a"}, {{{"a", "a"}, 1}});
  CHECK(neighbors(loop, "a").empty());
  CHECK(loop_count(loop, "a") == 1);

  // Left operand of the multigraph worked example: double edge plus a loop.
  Mhg left = multigraph({"*", "a"}, {{{"a", "*"}, 2}, {{"*", "*"}, 1}});
  CHECK(neighbors(left, "*") == std::vector<Label>{"a", "a"});
  CHECK(loop_count(left, "*") == 1);
  CHECK_THROWS_AS(neighbors(left, "z"), Error);
}

TEST_CASE("graph predicates") {
  CHECK(simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}).is_tree());
  CHECK_FALSE(simple_graph({"a", "b", "c"}, {{"a", "b"}}).is_tree());
  CHECK(simple_graph({"a", "b", "c"}, {{"a", "b"}}).is_forest());
  CHECK_FALSE(multigraph({"a", "b"}, {{{"a", "b"}, 2}}).is_forest());
  CHECK_FALSE(multigraph({"a"}, {{{"a", "a"}, 1}}).is_graph());
  CHECK(multigraph({"a"}, {{{"a", "a"}, 1}}).is_multigraph());
  CHECK(empty_graph({"a", "b"}).is_graph());
  CHECK_FALSE(empty_graph({"a", "b"}).is_connected());
  CHECK(empty_graph({"a"}).is_connected());
  Mhg hyper = Mhg::make({"a", "b", "c"}, {{make_edge({End{"a"}, End{"b"}, End{"c"}}), 1}});
  CHECK_FALSE(hyper.is_multigraph());
  CHECK(hyper.is_connected());
}

TEST_CASE("spanning trees") {
  Mhg tree = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto ts = spanning_trees(tree);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0] == tree);

  Mhg triangle = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(spanning_trees(triangle).size() == 3);

  Mhg dbl = multigraph({"a", "b"}, {{{"a", "b"}, 2}});
  auto dts = spanning_trees(dbl);
  CHECK(dts.size() == 2);  // one per parallel copy
  CHECK(dts[0] == dts[1]);

  // Brute-force oracle: subsets of edge instances of size n-1 that connect
  // everything without repeating an edge pair more than once.
  auto count_oracle = [](const Mhg& g) {
    std::vector<std::pair<Label, Label>> inst;
    for (const auto& [e, m] : g.edges()) {
      if (e.is_loop()) continue;
      for (int i = 0; i < m; ++i)
        inst.emplace_back(e.ends.front().first.v, e.ends.back().first.v);
    }
    int n = g.arity();
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << inst.size()); ++mask) {
      if (__builtin_popcount(mask) != n - 1) continue;
      std::map<Label, Label> parent;
      for (const auto& v : g.vertices()) parent[v] = v;
      std::function<Label(Label)> find = [&](Label x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      bool acyclic = true;
      for (std::size_t i = 0; i < inst.size() && acyclic; ++i) {
        if (!(mask >> i & 1)) continue;
        Label ra = find(inst[i].first), rb = find(inst[i].second);
        if (ra == rb)
          acyclic = false;
        else
          parent[ra] = rb;
      }
      if (acyclic) ++count;
    }
    return count;
  };
  Mhg mixed = multigraph({"a", "b", "c"}, {{{"a", "b"}, 2}, {{"b", "c"}, 1}, {{"a", "c"}, 1}, {{"c", "c"}, 1}});
  CHECK(static_cast<int>(spanning_trees(mixed).size()) == count_oracle(mixed));
  CHECK(static_cast<int>(spanning_trees(triangle).size()) == count_oracle(triangle));

  CHECK_THROWS_AS(spanning_trees(empty_graph({"a", "b"})), Error);
}

TEST_CASE("tree orientation and the forgetful map") {
  Mhg e = simple_graph({"a", "b"}, {{"a", "b"}});
  Mhg oriented = orient_by_tree(e, e, "a");
  REQUIRE(oriented.edges().size() == 1);
  const Edge& edge = oriented.edges().front().first;
  // Arrow on the parent side, plain on the child side.
  std::map<Label, EndSym> sym;
  for (const auto& [end, k] : edge.ends) sym[end.v] = end.sym;
  CHECK(sym["a"] == EndSym::arrow);
  CHECK(sym["b"] == EndSym::plain);

  Mhg tri = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Mhg t = simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Mhg otri = orient_by_tree(tri, t, "a");
  // The non-tree edge carries arrows on both ends.
  int both_arrows = 0;
  for (const auto& [edge2, m] : otri.edges()) {
    bool all = true;
    for (const auto& [end, k] : edge2.ends) all = all && end.sym == EndSym::arrow;
    if (all) ++both_arrows;
  }
  CHECK(both_arrows == 1);

  for (const auto& st : spanning_trees(tri)) CHECK(forget_orientation(orient_by_tree(tri, st, "b")) == tri);
  // g equal to the tree itself: nothing beyond the rooted orientation.
  CHECK(forget_orientation(orient_by_tree(t, t, "c")) == t);

  // Labelling every end and forgetting again is the identity.
  Mhg all_arrows = Mhg::make(
      tri.vertices(),
      [&] {
        std::vector<std::pair<Edge, int>> es;
        for (const auto& [edge3, m] : tri.edges()) {
          std::vector<End> units;
          for (const auto& [end, k] : edge3.ends)
            for (int j = 0; j < k; ++j) units.push_back(End{end.v, EndSym::arrow});
          es.emplace_back(make_edge(std::move(units)), m);
        }
        return es;
      }(),
      true);
  CHECK(forget_orientation(all_arrows) == tri);

  CHECK_THROWS_AS(orient_by_tree(tri, simple_graph({"a", "b", "c"}, {{"a", "b"}}), "a"), Error);
}

TEST_CASE("substitution: multigraph worked example") {
  Mhg g = multigraph({"*", "a"}, {{{"a", "*"}, 2}, {{"*", "*"}, 1}});
  Mhg tail = multigraph({"b", "c"}, {{{"b", "c"}, 1}, {{"c", "c"}, 1}});
  std::map<EndSym, EndReplacement> repl{
      {EndSym::plain, {{"b", Rational(1)}, {"c", Rational(1)}}}};
  GraphComb out = substitute(g, "*", repl, tail);

  auto mk = [](std::vector<std::pair<std::pair<Label, Label>, int>> edges) {
    return multigraph({"a", "b", "c"}, std::move(edges));
  };
  GraphComb expected;
  expected.add_term(mk({{{"a", "b"}, 2}, {{"b", "b"}, 1}, {{"b", "c"}, 1}, {{"c", "c"}, 1}}), 1);
  expected.add_term(mk({{{"a", "b"}, 2}, {{"b", "c"}, 1}, {{"c", "c"}, 2}}), 1);
  expected.add_term(mk({{{"a", "b"}, 2}, {{"b", "c"}, 2}, {{"c", "c"}, 1}}), 2);
  expected.add_term(mk({{{"a", "b"}, 1}, {{"a", "c"}, 1}, {{"b", "b"}, 1}, {{"b", "c"}, 1}, {{"c", "c"}, 1}}), 2);
  expected.add_term(mk({{{"a", "b"}, 1}, {{"a", "c"}, 1}, {{"b", "c"}, 1}, {{"c", "c"}, 2}}), 2);
  expected.add_term(mk({{{"a", "b"}, 1}, {{"a", "c"}, 1}, {{"b", "c"}, 2}, {{"c", "c"}, 1}}), 4);
  expected.add_term(mk({{{"a", "c"}, 2}, {{"b", "b"}, 1}, {{"b", "c"}, 1}, {{"c", "c"}, 1}}), 1);
  expected.add_term(mk({{{"a", "c"}, 2}, {{"b", "c"}, 1}, {{"c", "c"}, 2}}), 1);
  expected.add_term(mk({{{"a", "c"}, 2}, {{"b", "c"}, 2}, {{"c", "c"}, 1}}), 2);
  CHECK(out == expected);
}

TEST_CASE("substitution: isolated star and simple path") {
  Mhg g = empty_graph({"*", "a"});
  Mhg tail = simple_graph({"b", "c"}, {{"b", "c"}});
  std::map<EndSym, EndReplacement> repl{{EndSym::plain, {{"b", Rational(1)}, {"c", Rational(1)}}}};
  GraphComb out = substitute(g, "*", repl, tail);
  REQUIRE(out.size() == 1);
  CHECK(out.coeff(simple_graph({"a", "b", "c"}, {{"b", "c"}})) == 1);

  Mhg path = simple_graph({"*", "a", "b"}, {{"a", "*"}, {"*", "b"}});
  Mhg cd = simple_graph({"c", "d"}, {{"c", "d"}});
  std::map<EndSym, EndReplacement> repl2{{EndSym::plain, {{"c", Rational(1)}, {"d", Rational(1)}}}};
  GraphComb out2 = substitute(path, "*", repl2, cd);
  CHECK(out2.size() == 4);
  for (const auto& [graph, c] : out2.terms()) CHECK(c == 1);
  CHECK(out2.coeff(simple_graph({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}})) == 1);
  CHECK(out2.coeff(simple_graph({"a", "b", "c", "d"}, {{"a", "d"}, {"b", "d"}, {"c", "d"}})) == 1);
}

TEST_CASE("substitution properties") {
  std::mt19937_64 rng(17);
  const auto verts2 = std::vector<Label>{"b", "c", "d"};

  // Coefficient sum equals |V2|^(number of star ends), loops counting twice.
  for (int trial = 0; trial < 30; ++trial) {
    Mhg g = random_connected_multigraph({"*", "a1", "a2"}, rng, 2);
    Mhg tail = random_connected_multigraph(verts2, rng, 1);
    std::map<EndSym, EndReplacement> repl{{EndSym::plain,
                                           {{"b", Rational(1)}, {"c", Rational(1)}, {"d", Rational(1)}}}};
    GraphComb out = substitute(g, "*", repl, tail);
    int star_ends = 0;
    for (const auto& [e, m] : g.edges())
      for (const auto& [end, k] : e.ends)
        if (end.v == "*") star_ends += k * m;
    Rational total(0);
    for (const auto& [graph, c] : out.terms()) total += c;
    Rational expected(1);
    for (int i = 0; i < star_ends; ++i) expected *= 3;
    CHECK(total == expected);
  }

  // Equivariance under relabelings fixing the star.
  for (int trial = 0; trial < 20; ++trial) {
    Mhg g = random_connected_multigraph({"*", "a1", "a2"}, rng, 2);
    Mhg tail = random_connected_multigraph(verts2, rng, 1);
    std::map<EndSym, EndReplacement> repl{{EndSym::plain,
                                           {{"b", Rational(1)}, {"c", Rational(1)}, {"d", Rational(1)}}}};
    std::map<Label, Label> sigma{{"*", "*"}, {"a1", "x2"}, {"a2", "x1"}};
    std::map<Label, Label> ext = sigma;
    for (const auto& v : verts2) ext[v] = v;
    GraphComb lhs = substitute(relabel(g, sigma), "*", repl, tail);
    GraphComb rhs;
    GraphComb plainsub = substitute(g, "*", repl, tail);
    std::map<Label, Label> out_map;
    for (const auto& v : verts2) out_map[v] = v;
    out_map["a1"] = "x2";
    out_map["a2"] = "x1";
    rhs = relabel(plainsub, out_map);
    CHECK(lhs == rhs);
  }

  CHECK_THROWS_AS(substitute(empty_graph({"a"}), "*", {}, empty_graph({"b"})), Error);
  CHECK_THROWS_AS(substitute(empty_graph({"*", "a"}), "*", {}, empty_graph({"a"})), Error);
}

TEST_CASE("canonical keys and text rendering") {
  Mhg a = multigraph({"a", "b"}, {{{"a", "b"}, 1}, {{"a", "b"}, 1}});
  Mhg b = multigraph({"a", "b"}, {{{"a", "b"}, 2}});
  CHECK(a == b);  // parallel copies merge into one multiplicity-2 edge
  CHECK(a.key() == b.key());
  CHECK(a.edge_count() == 2);
  CHECK(empty_graph({"a"}).to_text() == "[a|]");
}
