#include <benchmark/benchmark.h>

#include "oforge/closure.hpp"
#include "oforge/egf.hpp"
#include "oforge/enumerate.hpp"
#include "oforge/graph.hpp"
#include "oforge/operad.hpp"

using namespace oforge;

static void BM_compose_multigraph(benchmark::State& state) {
  const auto& mg = operad_instance("mg");
  Rng rng(19);
  std::vector<Label> lx = {"*", "a1", "a2"};
  std::vector<Label> ly = {"b1", "b2", "b3"};
  Mhg x = random_connected_multigraph(lx, rng, 3);
  Mhg y = random_connected_multigraph(ly, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(compose(mg, x, "*", y));
}
BENCHMARK(BM_compose_multigraph);

static void BM_rowspace_insert(benchmark::State& state) {
  Rng rng(7);
  auto graphs = enumerate_simple_graphs(canonical_labels(4));
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<GraphComb> vecs;
  for (int i = 0; i < 48; ++i) {
    GraphComb w;
    for (const auto& g : graphs) w.add_term(g, Rational(coeff(rng)));
    vecs.push_back(w);
  }
  for (auto _ : state) {
    RowSpace<Mhg> rs;
    for (const auto& w : vecs) rs.insert(w);
    benchmark::DoNotOptimize(rs.rank());
  }
}
BENCHMARK(BM_rowspace_insert);

static void BM_shape_key_6(benchmark::State& state) {
  Mhg g = simple_graph(canonical_labels(6),
                       {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"1", "6"},
                        {"1", "4"}});
  for (auto _ : state) benchmark::DoNotOptimize(shape_key(g));
}
BENCHMARK(BM_shape_key_6);

static void BM_closure_arity4(benchmark::State& state) {
  const auto& g = operad_instance("g");
  std::vector<GraphComb> gens = {GraphComb::basis(empty_graph({"a", "b"})),
                                 GraphComb::basis(simple_graph({"a", "b"}, {{"a", "b"}}))};
  ClosureConfig cfg;
  cfg.max_arity = 4;
  for (auto _ : state) benchmark::DoNotOptimize(closure(g, gens, cfg).dims());
}
BENCHMARK(BM_closure_arity4);

static void BM_series_inverse(benchmark::State& state) {
  TruncEgf dual = hilbert_sp_dual(24);
  TruncEgf inner(24);
  for (int n = 0; n <= 24; ++n) {
    Rational c = dual.coeff(n);
    inner.coeff(n) = (n % 2 == 0) ? -c : c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(inner.compositional_inverse());
}
BENCHMARK(BM_series_inverse);

BENCHMARK_MAIN();
