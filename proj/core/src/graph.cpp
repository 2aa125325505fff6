#include "oforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "oforge/error.hpp"

namespace oforge {

namespace {

void append_label(std::string& out, const Label& l) {
  out += std::to_string(l.size());
  out += ':';
  out += l;
}

std::string edge_key(const Edge& e) {
  std::string k = "(";
  for (const auto& [end, m] : e.ends) {
    append_label(k, end.v);
    k += end_sym_char(end.sym);
    k += '^';
    k += std::to_string(m);
  }
  k += ')';
  return k;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if already in the same component.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int Edge::degree() const {
  int d = 0;
  for (const auto& [end, m] : ends) d += m;
  return d;
}

bool Edge::incident_to(const Label& v) const {
  for (const auto& [end, m] : ends)
    if (end.v == v) return true;
  return false;
}

bool Edge::is_loop() const {
  if (degree() != 2) return false;
  for (const auto& [end, m] : ends)
    if (end.v != ends.front().first.v) return false;
  return true;
}

Edge make_edge(std::vector<End> units) {
  if (units.empty()) fail_input("edge must have at least one end");
  std::sort(units.begin(), units.end());
  Edge e;
  for (const auto& u : units) {
    if (!e.ends.empty() && e.ends.back().first == u)
      ++e.ends.back().second;
    else
      e.ends.emplace_back(u, 1);
  }
  return e;
}

Edge plain_edge(const Label& a, const Label& b) { return make_edge({End{a}, End{b}}); }

Mhg Mhg::make(std::vector<Label> vertices, std::vector<std::pair<Edge, int>> edges, bool oriented,
              std::optional<Label> root) {
  if (vertices.empty()) fail_input("graph needs a non-empty vertex set");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail_input("duplicate vertex label");

  auto known = [&](const Label& v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };

  // Merge parallel copies and validate.
  std::map<Edge, int> merged;
  for (auto& [e, m] : edges) {
    if (m <= 0) fail_input("edge multiplicity must be positive");
    for (const auto& [end, k] : e.ends) {
      if (k <= 0) fail_input("end multiplicity must be positive");
      if (!known(end.v)) fail_input("edge end '" + end.v + "' is not a vertex");
      if (!oriented && end.sym != EndSym::plain)
        fail_input("end labels are only allowed on oriented graphs");
    }
    merged[e] += m;
  }
  if (root && !known(*root)) fail_input("root '" + *root + "' is not a vertex");

  Mhg g;
  g.vertices_ = std::move(vertices);
  g.edges_.assign(merged.begin(), merged.end());
  g.oriented_ = oriented;
  g.root_ = std::move(root);

  std::string k = "V{";
  for (const auto& v : g.vertices_) append_label(k, v);
  k += '}';
  if (g.oriented_) k += 'O';
  if (g.root_) {
    k += 'R';
    append_label(k, *g.root_);
  }
  k += "E{";
  for (const auto& [e, m] : g.edges_) {
    k += edge_key(e);
    k += '*';
    k += std::to_string(m);
  }
  k += '}';
  g.key_ = std::move(k);
  return g;
}

int Mhg::edge_count() const {
  int n = 0;
  for (const auto& [e, m] : edges_) n += m;
  return n;
}

bool Mhg::has_vertex(const Label& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Mhg::is_multigraph() const {
  for (const auto& [e, m] : edges_)
    if (e.degree() != 2) return false;
  return true;
}

bool Mhg::is_graph() const {
  for (const auto& [e, m] : edges_)
    if (e.degree() != 2 || e.is_loop() || m != 1) return false;
  return true;
}

bool Mhg::is_forest() const {
  if (!is_multigraph()) return false;
  UnionFind uf(arity());
  std::map<Label, int> idx;
  for (int i = 0; i < arity(); ++i) idx[vertices_[i]] = i;
  for (const auto& [e, m] : edges_) {
    if (e.is_loop() || m > 1) return false;
    const Label& a = e.ends.front().first.v;
    const Label& b = e.ends.back().first.v;
    if (!uf.unite(idx[a], idx[b])) return false;
  }
  return true;
}

bool Mhg::is_tree() const { return is_forest() && is_connected(); }

bool Mhg::is_connected() const {
  UnionFind uf(arity());
  std::map<Label, int> idx;
  for (int i = 0; i < arity(); ++i) idx[vertices_[i]] = i;
  for (const auto& [e, m] : edges_) {
    int first = idx[e.ends.front().first.v];
    for (const auto& [end, k] : e.ends) uf.unite(first, idx[end.v]);
  }
  int root = uf.find(0);
  for (int i = 1; i < arity(); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

Mhg Mhg::with_root(std::optional<Label> r) const {
  return Mhg::make(vertices_, edges_, oriented_, std::move(r));
}

std::string Mhg::to_text() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ' ';
    os << vertices_[i];
    if (root_ && *root_ == vertices_[i]) os << '!';
  }
  os << "|";
  bool first = true;
  for (const auto& [e, m] : edges_) {
    for (int c = 0; c < m; ++c) {
      if (!first) os << '+';
      first = false;
      for (const auto& [end, k] : e.ends)
        for (int j = 0; j < k; ++j) {
          os << end.v;
          if (oriented_ && end.sym == EndSym::arrow) os << '>';
        }
    }
  }
  os << ']';
  return os.str();
}

Mhg empty_graph(std::vector<Label> vertices, bool oriented, std::optional<Label> root) {
  return Mhg::make(std::move(vertices), {}, oriented, std::move(root));
}

Mhg simple_graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges,
                 std::optional<Label> root) {
  std::vector<std::pair<Edge, int>> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.emplace_back(plain_edge(a, b), 1);
  return Mhg::make(std::move(vertices), std::move(es), false, std::move(root));
}

Mhg multigraph(std::vector<Label> vertices,
               const std::vector<std::pair<std::pair<Label, Label>, int>>& edges,
               std::optional<Label> root) {
  std::vector<std::pair<Edge, int>> es;
  es.reserve(edges.size());
  for (const auto& [pair, m] : edges) es.emplace_back(plain_edge(pair.first, pair.second), m);
  return Mhg::make(std::move(vertices), std::move(es), false, std::move(root));
}

Mhg relabel(const Mhg& g, const std::map<Label, Label>& sigma) {
  std::set<Label> image;
  for (const auto& v : g.vertices()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) fail_input("relabel: no image for vertex '" + v + "'");
    if (!image.insert(it->second).second) fail_input("relabel: map is not injective");
  }
  auto apply = [&](const Label& v) { return sigma.at(v); };

  std::vector<Label> verts;
  verts.reserve(g.vertices().size());
  for (const auto& v : g.vertices()) verts.push_back(apply(v));

  std::vector<std::pair<Edge, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [e, m] : g.edges()) {
    std::vector<End> units;
    for (const auto& [end, k] : e.ends)
      for (int j = 0; j < k; ++j) units.push_back(End{apply(end.v), end.sym});
    edges.emplace_back(make_edge(std::move(units)), m);
  }
  std::optional<Label> root;
  if (g.root()) root = apply(*g.root());
  return Mhg::make(std::move(verts), std::move(edges), g.oriented(), std::move(root));
}

GraphComb relabel(const GraphComb& w, const std::map<Label, Label>& sigma) {
  return w.map_basis([&](const Mhg& g) { return relabel(g, sigma); });
}

std::map<Label, Label> bijection(const std::vector<Label>& from, const std::vector<Label>& to) {
  if (from.size() != to.size()) fail_input("bijection: size mismatch");
  std::map<Label, Label> sigma;
  for (std::size_t i = 0; i < from.size(); ++i) sigma[from[i]] = to[i];
  return sigma;
}

std::vector<Label> canonical_labels(int n) {
  std::vector<Label> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string shape_key(const Mhg& g) {
  int n = g.arity();
  if (n > 8) fail_bound("shape_key is limited to 8 vertices");
  auto targets = canonical_labels(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::map<Label, Label> sigma;
    for (int i = 0; i < n; ++i) sigma[g.vertices()[i]] = targets[perm[i]];
    std::string k = relabel(g, sigma).key();
    if (best.empty() || k < best) best = std::move(k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Label> neighbors(const Mhg& g, const Label& v) {
  if (!g.has_vertex(v)) fail_input("neighbors: vertex '" + v + "' absent");
  if (!g.is_multigraph()) fail_input("neighbors requires a multigraph");
  std::vector<Label> out;
  for (const auto& [e, m] : g.edges()) {
    if (e.is_loop()) continue;
    const Label& a = e.ends.front().first.v;
    const Label& b = e.ends.back().first.v;
    if (a == v)
      out.insert(out.end(), m, b);
    else if (b == v)
      out.insert(out.end(), m, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int loop_count(const Mhg& g, const Label& v) {
  if (!g.has_vertex(v)) fail_input("loop_count: vertex '" + v + "' absent");
  int n = 0;
  for (const auto& [e, m] : g.edges())
    if (e.is_loop() && e.ends.front().first.v == v) n += m;
  return n;
}

std::vector<Mhg> spanning_trees(const Mhg& g) {
  if (!g.is_multigraph()) fail_input("spanning_trees requires a multigraph");
  if (!g.is_connected()) fail_input("spanning_trees requires a connected graph");
  int n = g.arity();

  // Edge instances (loops can never join a tree).
  std::vector<Edge> instances;
  for (const auto& [e, m] : g.edges()) {
    if (e.is_loop()) continue;
    for (int i = 0; i < m; ++i) instances.push_back(e);
  }

  std::vector<Mhg> trees;
  if (n == 1) {
    trees.push_back(empty_graph(g.vertices()));
    return trees;
  }
  std::map<Label, int> idx;
  for (int i = 0; i < n; ++i) idx[g.vertices()[i]] = i;

  std::vector<int> pick;
  auto emit = [&]() {
    std::vector<std::pair<Edge, int>> es;
    for (int i : pick) {
      Edge plain = instances[i];
      for (auto& [end, k] : plain.ends) end.sym = EndSym::plain;
      es.emplace_back(make_edge([&] {
                        std::vector<End> units;
                        for (const auto& [end, k] : plain.ends)
                          for (int j = 0; j < k; ++j) units.push_back(end);
                        return units;
                      }()),
                      1);
    }
    trees.push_back(Mhg::make(g.vertices(), std::move(es)));
  };
  // Choose n-1 instances; acyclic with n-1 edges is exactly a spanning tree.
  auto rec = [&](auto&& self, std::size_t from, UnionFind uf) -> void {
    if (static_cast<int>(pick.size()) == n - 1) {
      emit();
      return;
    }
    int needed = n - 1 - static_cast<int>(pick.size());
    for (std::size_t i = from; i + needed <= instances.size(); ++i) {
      const Edge& e = instances[i];
      UnionFind next = uf;
      if (!next.unite(idx[e.ends.front().first.v], idx[e.ends.back().first.v])) continue;
      pick.push_back(static_cast<int>(i));
      self(self, i + 1, std::move(next));
      pick.pop_back();
    }
  };
  rec(rec, 0, UnionFind(n));
  return trees;
}

namespace {

// Multiset difference of edge lists; fails if sub is not contained.
std::vector<std::pair<Edge, int>> edge_difference(const Mhg& g, const Mhg& sub) {
  std::map<Edge, int> left(g.edges().begin(), g.edges().end());
  for (const auto& [e, m] : sub.edges()) {
    auto it = left.find(e);
    if (it == left.end() || it->second < m) fail_input("edge set is not a subset of the graph");
    it->second -= m;
    if (it->second == 0) left.erase(it);
  }
  return {left.begin(), left.end()};
}

}  // namespace

Mhg orient_by_tree(const Mhg& g, const Mhg& t, const Label& r) {
  if (g.oriented() || t.oriented()) fail_input("orient_by_tree expects plain graphs");
  if (!g.has_vertex(r)) fail_input("orient_by_tree: root absent");
  if (t.vertices() != g.vertices() || !t.is_tree()) fail_input("orient_by_tree: t must be a spanning tree");
  auto rest = edge_difference(g, t);

  // Parent map of t rooted at r.
  std::map<Label, std::vector<Label>> adj;
  for (const auto& [e, m] : t.edges()) {
    const Label& a = e.ends.front().first.v;
    const Label& b = e.ends.back().first.v;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<Label, Label> parent;
  std::vector<Label> stack{r};
  std::set<Label> seen{r};
  while (!stack.empty()) {
    Label u = stack.back();
    stack.pop_back();
    for (const auto& w : adj[u]) {
      if (seen.insert(w).second) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }

  std::vector<std::pair<Edge, int>> edges;
  for (const auto& [c, p] : parent)
    edges.emplace_back(make_edge({End{p, EndSym::arrow}, End{c, EndSym::plain}}), 1);
  for (const auto& [e, m] : rest) {
    std::vector<End> units;
    for (const auto& [end, k] : e.ends)
      for (int j = 0; j < k; ++j) units.push_back(End{end.v, EndSym::arrow});
    edges.emplace_back(make_edge(std::move(units)), m);
  }
  return Mhg::make(g.vertices(), std::move(edges), /*oriented=*/true);
}

Mhg forget_orientation(const Mhg& g) {
  std::vector<std::pair<Edge, int>> edges;
  for (const auto& [e, m] : g.edges()) {
    std::vector<End> units;
    for (const auto& [end, k] : e.ends)
      for (int j = 0; j < k; ++j) units.push_back(End{end.v, EndSym::plain});
    edges.emplace_back(make_edge(std::move(units)), m);
  }
  return Mhg::make(g.vertices(), std::move(edges), /*oriented=*/false, g.root());
}

GraphComb forget_orientation(const GraphComb& w) {
  return w.map_basis([](const Mhg& g) { return forget_orientation(g); });
}

GraphComb substitute(const Mhg& g, const Label& star, const std::map<EndSym, EndReplacement>& repl,
                     const Mhg& tail) {
  if (!g.has_vertex(star)) fail_input("substitute: star vertex absent");
  if (g.oriented() != tail.oriented()) fail_input("substitute: mixed plain/oriented operands");
  for (const auto& v : g.vertices())
    if (v != star && tail.has_vertex(v)) fail_carrier("substitute: vertex sets overlap at '" + v + "'");
  for (const auto& [sym, comb] : repl)
    for (const auto& [v, c] : comb)
      if (!tail.has_vertex(v)) fail_input("substitute: replacement vertex '" + v + "' not in tail");

  // Untouched edges and the star-incident instances to expand.
  std::vector<std::pair<Edge, int>> untouched = tail.edges();
  std::vector<const Edge*> star_instances;
  for (const auto& [e, m] : g.edges()) {
    if (!e.incident_to(star)) {
      untouched.emplace_back(e, m);
    } else {
      for (int i = 0; i < m; ++i) star_instances.push_back(&e);
    }
  }

  std::vector<Label> out_verts = tail.vertices();
  for (const auto& v : g.vertices())
    if (v != star) out_verts.push_back(v);

  // Per-instance expansion: each star unit independently picks one term of
  // the replacement for its symbol, keeping the symbol.
  auto expand_instance = [&](const Edge& e) {
    LinComb<Edge> out;
    std::vector<End> fixed;
    std::vector<EndSym> slots;
    for (const auto& [end, k] : e.ends) {
      for (int j = 0; j < k; ++j) {
        if (end.v == star)
          slots.push_back(end.sym);
        else
          fixed.push_back(end);
      }
    }
    std::vector<End> chosen;
    auto rec = [&](auto&& self, std::size_t i, const Rational& coef) -> void {
      if (i == slots.size()) {
        std::vector<End> units = fixed;
        units.insert(units.end(), chosen.begin(), chosen.end());
        out.add_term(make_edge(std::move(units)), coef);
        return;
      }
      auto it = repl.find(slots[i]);
      if (it == repl.end()) fail_input("substitute: no replacement for an end symbol");
      for (const auto& [v, c] : it->second) {
        chosen.push_back(End{v, slots[i]});
        self(self, i + 1, coef * c);
        chosen.pop_back();
      }
    };
    rec(rec, 0, Rational(1));
    return out;
  };

  std::vector<LinComb<Edge>> expansions;
  expansions.reserve(star_instances.size());
  for (const Edge* e : star_instances) expansions.push_back(expand_instance(*e));

  GraphComb result;
  std::vector<std::pair<Edge, int>> chosen_edges;
  auto rec = [&](auto&& self, std::size_t i, const Rational& coef) -> void {
    if (coef == 0) return;
    if (i == expansions.size()) {
      std::vector<std::pair<Edge, int>> edges = untouched;
      edges.insert(edges.end(), chosen_edges.begin(), chosen_edges.end());
      result.add_term(Mhg::make(out_verts, std::move(edges), g.oriented()), coef);
      return;
    }
    for (const auto& [e, c] : expansions[i].terms()) {
      chosen_edges.emplace_back(e, 1);
      self(self, i + 1, coef * c);
      chosen_edges.pop_back();
    }
  };
  rec(rec, 0, Rational(1));
  return result;
}

}  // namespace oforge
