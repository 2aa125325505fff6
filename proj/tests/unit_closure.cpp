#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oforge/closure.hpp"
#include "oforge/enumerate.hpp"
#include "oforge/error.hpp"

using namespace oforge;

namespace {

GraphComb pts() { return GraphComb::basis(empty_graph({"a", "b"})); }
GraphComb seg() { return GraphComb::basis(simple_graph({"a", "b"}, {{"a", "b"}})); }
GraphComb lp_loop() { return GraphComb::basis(multigraph({"a"}, {{{"a", "a"}, 1}})); }

}  // namespace

TEST_CASE("two isolated points generate a one-dimensional span per arity") {
  ClosureConfig cfg;
  cfg.max_arity = 6;
  ClosureTable table = closure(operad_instance("g"), {pts()}, cfg);
  CHECK(table.dims() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("the segment generates the magma dimensions") {
  ClosureConfig cfg;
  cfg.max_arity = 4;
  ClosureTable table = closure(operad_instance("g"), {seg()}, cfg);
  CHECK(table.dims() == std::vector<std::size_t>{1, 1, 3, 15});

  // Every basis vector is supported on trees.
  for (int n = 2; n <= 4; ++n)
    for (const auto& row : table.span(n).basis())
      for (const auto& [g, c] : row.terms()) CHECK(g.is_tree());
}

TEST_CASE("membership basics") {
  ClosureConfig cfg;
  cfg.max_arity = 3;
  ClosureTable table = closure(operad_instance("g"), {seg()}, cfg);
  CHECK(membership(table, seg()));
  CHECK(membership(table, Rational(5) * seg()));
  CHECK_FALSE(membership(table, pts()));
  CHECK(membership(table, GraphComb{}));

  ClosureConfig small = cfg;
  small.max_arity = 2;
  ClosureTable t2 = closure(operad_instance("g"), {seg()}, small);
  CHECK_THROWS_AS(
      membership(t2, GraphComb::basis(simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}))),
      Error);
}

TEST_CASE("dimensions are invariant under generator order and scaling") {
  ClosureConfig cfg;
  cfg.max_arity = 4;
  const auto& g = operad_instance("g");
  auto d1 = closure(g, {pts(), seg()}, cfg).dims();
  auto d2 = closure(g, {seg(), pts()}, cfg).dims();
  auto d3 = closure(g, {Rational(3, 2) * pts(), Rational(-7) * seg()}, cfg).dims();
  CHECK(d1 == d2);
  CHECK(d1 == d3);
  CHECK(d1 == std::vector<std::size_t>{1, 2, 7, 37});
}

TEST_CASE("loop and points span with an edge cap") {
  ClosureConfig cfg;
  cfg.max_arity = 2;
  cfg.max_edges = 3;
  const auto& mg = operad_instance("mg");
  ClosureTable table = closure(mg, {lp_loop(), pts()}, cfg);
  CHECK(membership(table, Rational(2) * seg()));
  CHECK(membership(table, seg()));

  // Without a cap, arity-1 generators would make the spans infinite.
  ClosureConfig nocap;
  nocap.max_arity = 2;
  CHECK_THROWS_AS(closure(mg, {lp_loop(), pts()}, nocap), Error);
}

TEST_CASE("closure validates generators") {
  ClosureConfig cfg;
  cfg.max_arity = 2;
  const auto& g = operad_instance("g");
  CHECK_THROWS_AS(closure(g, {lp_loop()}, cfg), Error);  // loop outside simple graphs
  ClosureConfig tiny;
  tiny.max_arity = 1;
  CHECK_THROWS_AS(closure(g, {seg()}, tiny), Error);  // arity above the table
  ClosureConfig big;
  big.max_arity = 7;
  CHECK_THROWS_AS(closure(g, {seg()}, big), Error);  // needs unsafe_arity
}

TEST_CASE("generator reports at low arity") {
  const auto& g = operad_instance("g");
  ClosureConfig cfg;
  cfg.max_arity = 3;
  ClosureTable table(g, cfg);
  table.span(1).insert(GraphComb::basis(operad_unit(g, "1")));

  GeneratorReport r2 = generator_search(table, ambient_simple_graphs(), 2);
  CHECK(r2.ambient_dim == 2);
  CHECK(r2.composable_rank == 0);
  CHECK(r2.shapes.size() == 2);
  CHECK(r2.minimal);

  GeneratorReport r3 = generator_search(table, ambient_simple_graphs(), 3);
  CHECK(r3.ambient_dim == 8);
  CHECK(r3.composable_rank == 7);
  REQUIRE(r3.shapes.size() == 1);
  CHECK(r3.shapes[0].edges == 3);  // the triangle
  CHECK(r3.minimal);
}

TEST_CASE("closure respects worker configuration") {
  // Deterministic results regardless of the worker count.
  ClosureConfig one;
  one.max_arity = 4;
  one.threads = 1;
  ClosureConfig many = one;
  many.threads = 4;
  const auto& g = operad_instance("g");
  CHECK(closure(g, {pts(), seg()}, one).dims() == closure(g, {pts(), seg()}, many).dims());
}
