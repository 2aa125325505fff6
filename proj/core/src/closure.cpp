#include "oforge/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "oforge/enumerate.hpp"
#include "oforge/error.hpp"

namespace oforge {

unsigned worker_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("OPERAD_FORGE_THREADS")) {
    unsigned cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(1u, n);
}

namespace {

// Deterministic fan-out: results are collected in job order, so the reducer
// sees the same sequence no matter how many workers run.
template <class Job, class Fn>
std::vector<GraphComb> parallel_map(const std::vector<Job>& jobs, Fn&& fn, unsigned threads) {
  std::vector<GraphComb> results(jobs.size());
  if (threads <= 1 || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = fn(jobs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      results[i] = fn(jobs[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

int edge_count_of(const GraphComb& v) { return v.terms().begin()->first.edge_count(); }

// All supports must live on one common vertex set.
const std::vector<Label>& support_vertices(const GraphComb& v) {
  const auto& verts = v.terms().begin()->first.vertices();
  for (const auto& [g, c] : v.terms())
    if (g.vertices() != verts) fail_input("combination mixes vertex sets");
  return verts;
}

int arity_of(const GraphComb& v) { return static_cast<int>(support_vertices(v).size()); }

void check_edge_homogeneous(const GraphComb& v) {
  int e = edge_count_of(v);
  for (const auto& [g, c] : v.terms())
    if (g.edge_count() != e) fail_input("combination is not edge-homogeneous");
}

bool is_unit_row(const OperadInstance& op, const GraphComb& row) {
  return row.size() == 1 && row.terms().begin()->first == operad_unit(op, "1");
}

// Closes the span under adjacent transpositions of the canonical labels.
void symmetric_close(RowSpace<Mhg>& rs, int arity) {
  if (arity < 2) return;
  auto labels = canonical_labels(arity);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& row : rs.basis()) {
      for (int i = 0; i + 1 < arity; ++i) {
        std::map<Label, Label> tau;
        for (const auto& l : labels) tau[l] = l;
        tau[labels[i]] = labels[i + 1];
        tau[labels[i + 1]] = labels[i];
        if (rs.insert(relabel(row, tau))) grew = true;
      }
    }
  }
}

struct SweepJob {
  GraphComb x;  // hole already at "*", labels in the complement of W
  GraphComb y;  // labels in W
};

// Inserts all canonical compositions of lower-arity basis vectors into out.
// Sources are the spans at arities p, q with p + q - 1 = n; the spans are
// symmetric-group closed, so one order-preserving bijection per label subset
// suffices for y while every hole position of x is swept.
bool sweep_compositions(const OperadInstance& op, const ClosureTable& table, int n,
                        std::optional<int> max_edges, unsigned threads, RowSpace<Mhg>& out) {
  auto target = canonical_labels(n);
  std::vector<SweepJob> jobs;

  for (int p = 1; p <= n; ++p) {
    int q = n + 1 - p;
    if (q < 1) continue;
    auto xs = table.span(p).basis();
    auto ys = table.span(q).basis();
    auto px = canonical_labels(p);
    auto py = canonical_labels(q);

    // Subsets W of the target labels receiving y.
    std::vector<int> comb(q);
    std::iota(comb.begin(), comb.end(), 0);
    auto advance = [&]() {
      int i = q - 1;
      while (i >= 0 && comb[i] == n - q + i) --i;
      if (i < 0) return false;
      ++comb[i];
      for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    };

    do {
      std::vector<Label> w, rest;
      std::vector<bool> in_w(n, false);
      for (int i : comb) in_w[i] = true;
      for (int i = 0; i < n; ++i) (in_w[i] ? w : rest).push_back(target[i]);

      for (const auto& y : ys) {
        if (q == 1 && is_unit_row(op, y)) continue;
        GraphComb yw = relabel(y, bijection(py, w));
        for (const auto& x : xs) {
          if (p == 1 && is_unit_row(op, x)) continue;
          if (max_edges && edge_count_of(x) + edge_count_of(y) > *max_edges) continue;
          for (int h = 0; h < p; ++h) {
            std::map<Label, Label> sx;
            int k = 0;
            for (int i = 0; i < p; ++i) sx[px[i]] = (i == h) ? "*" : rest[k++];
            jobs.push_back(SweepJob{relabel(x, sx), yw});
          }
        }
      }
    } while (advance());
  }

  auto results = parallel_map(
      jobs, [&](const SweepJob& j) { return compose(op, j.x, "*", j.y); }, threads);
  bool grew = false;
  for (auto& r : results)
    if (out.insert(r)) grew = true;
  return grew;
}

}  // namespace

ClosureTable::ClosureTable(const OperadInstance& op, ClosureConfig cfg)
    : op_(&op), cfg_(cfg), spans_(static_cast<std::size_t>(cfg.max_arity)) {
  if (cfg_.max_arity < 1) fail_bound("max arity must be at least 1");
  if (cfg_.max_arity > 6 && !cfg_.unsafe_arity)
    fail_bound("arity cap above 6 requires the unsafe-arity override");
}

RowSpace<Mhg>& ClosureTable::span(int arity) {
  if (arity < 1 || arity > cfg_.max_arity) fail_bound("arity outside the table");
  return spans_[static_cast<std::size_t>(arity - 1)];
}

const RowSpace<Mhg>& ClosureTable::span(int arity) const {
  if (arity < 1 || arity > cfg_.max_arity) fail_bound("arity outside the table");
  return spans_[static_cast<std::size_t>(arity - 1)];
}

std::vector<std::size_t> ClosureTable::dims() const {
  std::vector<std::size_t> out;
  out.reserve(spans_.size());
  for (const auto& rs : spans_) out.push_back(rs.rank());
  return out;
}

ClosureTable closure(const OperadInstance& op, const std::vector<GraphComb>& generators,
                     ClosureConfig cfg) {
  ClosureTable table(op, cfg);
  unsigned threads = worker_count(cfg.threads);

  std::map<int, std::vector<GraphComb>> by_arity;
  bool nontrivial_arity1 = false;
  for (const auto& gen : generators) {
    if (gen.is_zero()) continue;
    int n = arity_of(gen);
    for (const auto& [g, c] : gen.terms())
      if (!op.in_carrier(g)) fail_carrier("generator outside the carrier: " + g.to_text());
    if (cfg.max_edges) {
      check_edge_homogeneous(gen);
      if (edge_count_of(gen) > *cfg.max_edges) fail_bound("generator exceeds the edge cap");
    }
    if (n > cfg.max_arity) fail_bound("generator arity exceeds the table");
    if (n == 1 && gen.size() > 0) nontrivial_arity1 = true;
    // Canonical labels.
    auto verts = gen.terms().begin()->first.vertices();
    by_arity[n].push_back(relabel(gen, bijection(verts, canonical_labels(n))));
  }
  if (nontrivial_arity1 && !cfg.max_edges)
    fail_bound("arity-1 generators need an edge cap to keep spans finite");

  for (int n = 1; n <= cfg.max_arity; ++n) {
    auto& rs = table.span(n);
    if (n == 1) rs.insert(GraphComb::basis(operad_unit(op, "1")));
    if (auto it = by_arity.find(n); it != by_arity.end())
      for (const auto& gen : it->second) rs.insert(gen);
    symmetric_close(rs, n);

    // Compositions of newly found vectors can add rank (arity-1 factors keep
    // the arity), so sweep until stable.
    bool grew = true;
    while (grew) {
      grew = sweep_compositions(op, table, n, cfg.max_edges, threads, rs);
      if (grew) symmetric_close(rs, n);
    }
  }
  return table;
}

bool membership(const ClosureTable& table, const GraphComb& v) {
  if (v.is_zero()) return true;
  int n = arity_of(v);
  if (n > table.max_arity()) fail_bound("vector arity exceeds the table");
  if (table.config().max_edges) {
    check_edge_homogeneous(v);
    if (edge_count_of(v) > *table.config().max_edges)
      fail_bound("vector exceeds the table's edge cap");
  }
  auto verts = v.terms().begin()->first.vertices();
  GraphComb canon = relabel(v, bijection(verts, canonical_labels(n)));
  return table.span(n).contains(canon);
}

AmbientEnum ambient_simple_graphs() {
  return [](int n) { return enumerate_simple_graphs(canonical_labels(n)); };
}

AmbientEnum ambient_trees() {
  return [](int n) { return enumerate_trees(canonical_labels(n)); };
}

GeneratorReport generator_search(ClosureTable& table, const AmbientEnum& ambient, int n) {
  const OperadInstance& op = table.op();
  unsigned threads = worker_count(table.config().threads);
  for (int p = 1; p < n; ++p)
    if (p == 1 ? table.span(p).rank() < 1 : table.span(p).empty())
      fail_input("generator_search needs the table complete through arity " + std::to_string(n - 1));

  std::vector<Mhg> basis_graphs = ambient(n);

  // Composable span from the lower arities.
  RowSpace<Mhg> comp;
  sweep_compositions(op, table, n, table.config().max_edges, threads, comp);
  symmetric_close(comp, n);

  GeneratorReport report;
  report.arity = n;
  report.ambient_dim = basis_graphs.size();
  report.composable_rank = comp.rank();
  RowSpace<Mhg> before_greedy = comp;

  // Orbit bucketing: one shape key per isomorphism class.
  auto labels = canonical_labels(n);
  std::vector<int> perm(n);
  std::map<std::string, std::vector<Mhg>> orbit_of_shape;
  std::map<std::string, std::string> shape_of;
  for (const auto& g : basis_graphs) {
    if (shape_of.count(g.key())) continue;
    std::string shape;
    std::vector<Mhg> orbit;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::map<Label, Label> sigma;
      for (int i = 0; i < n; ++i) sigma[labels[i]] = labels[perm[i]];
      Mhg image = relabel(g, sigma);
      if (shape.empty() || image.key() < shape) shape = image.key();
      orbit.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const auto& im : orbit) shape_of[im.key()] = shape;
    orbit_of_shape[shape] = std::move(orbit);
  }

  // Greedy completion in (edge count, shape, key) order.
  std::vector<Mhg> ordered = basis_graphs;
  std::sort(ordered.begin(), ordered.end(), [&](const Mhg& a, const Mhg& b) {
    auto ka = std::make_tuple(a.edge_count(), shape_of.at(a.key()), a.key());
    auto kb = std::make_tuple(b.edge_count(), shape_of.at(b.key()), b.key());
    return ka < kb;
  });

  for (const auto& g : ordered) {
    if (comp.rank() == report.ambient_dim) break;
    const std::string& shape = shape_of.at(g.key());
    std::size_t before = comp.rank();
    for (const auto& im : orbit_of_shape.at(shape)) comp.insert(GraphComb::basis(im));
    if (comp.rank() > before)
      report.shapes.push_back(GeneratorShape{shape, g, g.edge_count(), comp.rank() - before});
  }
  if (comp.rank() != report.ambient_dim)
    fail_input("generator search could not complete the ambient span");

  // Arity-local minimality: dropping any picked shape must lose rank.
  report.minimal = true;
  for (std::size_t skip = 0; skip < report.shapes.size(); ++skip) {
    RowSpace<Mhg> partial = before_greedy;
    for (std::size_t i = 0; i < report.shapes.size(); ++i) {
      if (i == skip) continue;
      for (const auto& im : orbit_of_shape.at(report.shapes[i].shape))
        partial.insert(GraphComb::basis(im));
    }
    if (partial.rank() == report.ambient_dim) {
      report.minimal = false;
      break;
    }
  }

  table.span(n) = comp;
  return report;
}

}  // namespace oforge
