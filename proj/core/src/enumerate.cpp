#include "oforge/enumerate.hpp"

#include <algorithm>
#include <set>

#include "oforge/error.hpp"

namespace oforge {

namespace {

std::vector<Edge> candidate_degree2_edges(const std::vector<Label>& verts, bool oriented) {
  std::vector<End> units;
  for (const auto& v : verts) {
    units.push_back(End{v, EndSym::plain});
    if (oriented) units.push_back(End{v, EndSym::arrow});
  }
  std::sort(units.begin(), units.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i; j < units.size(); ++j) out.push_back(make_edge({units[i], units[j]}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Mhg decode_pruefer(const std::vector<Label>& verts, const std::vector<int>& seq) {
  int n = static_cast<int>(verts.size());
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<Edge, int>> edges;
  std::set<int> leaves;
  for (int i = 0; i < n; ++i)
    if (degree[i] == 1) leaves.insert(i);
  std::vector<int> rest = seq;
  for (int s : rest) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(plain_edge(verts[leaf], verts[s]), 1);
    if (--degree[s] == 1) leaves.insert(s);
  }
  auto it = leaves.begin();
  int a = *it++;
  int b = *it;
  edges.emplace_back(plain_edge(verts[a], verts[b]), 1);
  return Mhg::make(verts, std::move(edges));
}

}  // namespace

std::vector<Mhg> enumerate_multigraphs(const std::vector<Label>& verts, int max_edges,
                                       bool oriented) {
  auto candidates = candidate_degree2_edges(verts, oriented);
  std::vector<Mhg> out;
  std::vector<std::pair<Edge, int>> chosen;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
    out.push_back(Mhg::make(verts, chosen, oriented));
    if (remaining == 0) return;
    for (std::size_t i = from; i < candidates.size(); ++i)
      for (int m = 1; m <= remaining; ++m) {
        chosen.emplace_back(candidates[i], m);
        self(self, i + 1, remaining - m);
        chosen.pop_back();
      }
  };
  rec(rec, 0, max_edges);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mhg> enumerate_simple_graphs(const std::vector<Label>& verts) {
  std::vector<std::pair<Label, Label>> pairs;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) pairs.emplace_back(verts[i], verts[j]);
  std::vector<Mhg> out;
  out.reserve(1u << pairs.size());
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::vector<std::pair<Edge, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.emplace_back(plain_edge(pairs[i].first, pairs[i].second), 1);
    out.push_back(Mhg::make(verts, std::move(edges)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mhg> enumerate_trees(const std::vector<Label>& verts) {
  int n = static_cast<int>(verts.size());
  std::vector<Label> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Mhg> out;
  if (n == 1) {
    out.push_back(empty_graph(sorted));
    return out;
  }
  if (n == 2) {
    out.push_back(simple_graph(sorted, {{sorted[0], sorted[1]}}));
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    out.push_back(decode_pruefer(sorted, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootedTree> enumerate_rooted_trees(const std::vector<Label>& verts) {
  std::vector<RootedTree> out;
  for (const auto& t : enumerate_trees(verts))
    for (const auto& r : t.vertices()) out.push_back(root_tree(t, r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mhg> enumerate_carrier(const OperadInstance& op, const std::vector<Label>& verts,
                                   int max_edges) {
  std::vector<Mhg> base = enumerate_multigraphs(verts, max_edges, op.oriented);
  std::vector<Mhg> out;
  for (const auto& g : base) {
    if (op.rooted) {
      for (const auto& r : g.vertices()) {
        Mhg rooted = g.with_root(r);
        if (op.in_carrier(rooted)) out.push_back(std::move(rooted));
      }
    } else if (op.in_carrier(g)) {
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mhg random_tree(const std::vector<Label>& verts, Rng& rng) {
  int n = static_cast<int>(verts.size());
  std::vector<Label> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (n == 1) return empty_graph(sorted);
  if (n == 2) return simple_graph(sorted, {{sorted[0], sorted[1]}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  return decode_pruefer(sorted, seq);
}

RootedTree random_rooted_tree(const std::vector<Label>& verts, Rng& rng) {
  Mhg t = random_tree(verts, rng);
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  return root_tree(t, t.vertices()[pick(rng)]);
}

Mhg random_connected_multigraph(const std::vector<Label>& verts, Rng& rng, int extra_edges) {
  Mhg t = random_tree(verts, rng);
  std::vector<std::pair<Edge, int>> edges = t.edges();
  std::uniform_int_distribution<int> count(0, extra_edges);
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  int extra = count(rng);
  std::vector<Label> sorted = t.vertices();
  for (int i = 0; i < extra; ++i)
    edges.emplace_back(plain_edge(sorted[pick(rng)], sorted[pick(rng)]), 1);
  return Mhg::make(sorted, std::move(edges));
}

Mhg random_carrier(const OperadInstance& op, const std::vector<Label>& verts, Rng& rng,
                   int max_edges) {
  int n = static_cast<int>(verts.size());
  std::uniform_int_distribution<std::size_t> pick_vertex(0, verts.size() - 1);
  auto pick_root = [&](const Mhg& g) -> Mhg {
    return op.rooted ? g.with_root(g.vertices()[pick_vertex(rng)]) : g;
  };

  if (op.name == "t") return random_tree(verts, rng);
  if (op.name == "gc" || op.name == "mgc") {
    for (int attempt = 0; attempt < 256; ++attempt) {
      Mhg g = random_connected_multigraph(verts, rng, std::max(0, max_edges - (n - 1)));
      if (op.in_carrier(g)) return g;
    }
    fail_input("could not sample a connected carrier element");
  }

  std::vector<Label> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::uniform_int_distribution<int> count(0, max_edges);
  std::uniform_int_distribution<int> sym(0, 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    int k = count(rng);
    std::vector<std::pair<Edge, int>> edges;
    for (int i = 0; i < k; ++i) {
      End a{sorted[pick_vertex(rng)],
            op.oriented && sym(rng) ? EndSym::arrow : EndSym::plain};
      End b{sorted[pick_vertex(rng)],
            op.oriented && sym(rng) ? EndSym::arrow : EndSym::plain};
      edges.emplace_back(make_edge({a, b}), 1);
    }
    Mhg g = pick_root(Mhg::make(sorted, std::move(edges), op.oriented));
    if (op.in_carrier(g)) return g;
  }
  fail_input("could not sample a carrier element for " + op.name);
}

}  // namespace oforge
