#include "oforge/plie.hpp"

#include <algorithm>
#include <set>

#include "oforge/error.hpp"

namespace oforge {

namespace {

void append_label(std::string& out, const Label& l) {
  out += std::to_string(l.size());
  out += ':';
  out += l;
}

}  // namespace

RootedTree RootedTree::make(std::vector<Label> vertices, Label root,
                            std::map<Label, Label> parent) {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty()) fail_input("rooted tree needs at least one vertex");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail_input("duplicate vertex label");
  auto known = [&](const Label& v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };
  if (!known(root)) fail_input("root is not a vertex");
  if (parent.count(root)) fail_input("root must not have a parent");
  for (const auto& v : vertices)
    if (v != root && !parent.count(v)) fail_input("vertex '" + v + "' has no parent");
  for (const auto& [c, p] : parent)
    if (!known(c) || !known(p)) fail_input("parent map mentions unknown vertex");

  // Acyclicity: every vertex must reach the root.
  for (const auto& v : vertices) {
    Label cur = v;
    std::size_t steps = 0;
    while (cur != root) {
      cur = parent.at(cur);
      if (++steps > vertices.size()) fail_input("parent map has a cycle");
    }
  }

  RootedTree t;
  t.vertices_ = std::move(vertices);
  t.root_ = std::move(root);
  t.parent_ = std::move(parent);
  std::string k = "T{";
  append_label(k, t.root_);
  for (const auto& [c, p] : t.parent_) {
    append_label(k, c);
    k += '<';
    append_label(k, p);
  }
  k += '}';
  t.key_ = std::move(k);
  return t;
}

bool RootedTree::has_vertex(const Label& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Label> RootedTree::children(const Label& v) const {
  std::vector<Label> out;
  for (const auto& [c, p] : parent_)
    if (p == v) out.push_back(c);
  return out;
}

std::string RootedTree::to_text() const {
  std::string s = "(" + root_ + "!";
  for (const auto& [c, p] : parent_) s += " " + p + "<-" + c;
  s += ")";
  return s;
}

RootedTree tree_unit(const Label& v) { return RootedTree::make({v}, v, {}); }

RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& sigma) {
  std::vector<Label> verts;
  for (const auto& v : t.vertices()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) fail_input("relabel: no image for vertex '" + v + "'");
    verts.push_back(it->second);
  }
  std::map<Label, Label> parent;
  for (const auto& [c, p] : t.parent()) parent[sigma.at(c)] = sigma.at(p);
  return RootedTree::make(std::move(verts), sigma.at(t.root()), std::move(parent));
}

RootedTree root_tree(const Mhg& tree, const Label& r) {
  if (!tree.is_tree()) fail_input("root_tree expects a tree");
  if (!tree.has_vertex(r)) fail_input("root_tree: root absent");
  std::map<Label, std::vector<Label>> adj;
  for (const auto& [e, m] : tree.edges()) {
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
    for (const auto& w : adj[u])
      if (seen.insert(w).second) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  return RootedTree::make(tree.vertices(), r, std::move(parent));
}

TreeComb plie_compose(const RootedTree& t1, const Label& star, const RootedTree& t2) {
  if (!t1.has_vertex(star)) fail_input("plie_compose: star absent");
  for (const auto& v : t1.vertices())
    if (v != star && t2.has_vertex(v)) fail_carrier("plie_compose: vertex sets overlap at '" + v + "'");

  std::vector<Label> verts = t2.vertices();
  for (const auto& v : t1.vertices())
    if (v != star) verts.push_back(v);

  std::map<Label, Label> base;
  for (const auto& [c, p] : t1.parent())
    if (c != star && p != star) base[c] = p;
  for (const auto& [c, p] : t2.parent()) base[c] = p;

  std::vector<Label> star_children = t1.children(star);
  Label out_root = (t1.root() == star) ? t2.root() : t1.root();
  if (t1.root() != star) base[t2.root()] = t1.parent().at(star);

  TreeComb out;
  std::vector<Label> choice(star_children.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == star_children.size()) {
      std::map<Label, Label> parent = base;
      for (std::size_t k = 0; k < star_children.size(); ++k) parent[star_children[k]] = choice[k];
      out.add_term(RootedTree::make(verts, out_root, std::move(parent)), Rational(1));
      return;
    }
    for (const auto& v : t2.vertices()) {
      choice[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

TreeComb plie_compose(const TreeComb& x, const Label& star, const TreeComb& y) {
  TreeComb out;
  for (const auto& [t1, c1] : x.terms())
    for (const auto& [t2, c2] : y.terms()) {
      TreeComb part = plie_compose(t1, star, t2);
      for (const auto& [t, c] : part.terms()) out.add_term(t, c1 * c2 * c);
    }
  return out;
}

TreeComb psi(const Mhg& tree) {
  if (!tree.is_tree()) fail_input("psi expects a tree");
  TreeComb out;
  for (const auto& r : tree.vertices()) out.add_term(root_tree(tree, r), Rational(1));
  return out;
}

Mhg rooted_tree_to_graph(const RootedTree& t) {
  std::vector<std::pair<Edge, int>> edges;
  for (const auto& [c, p] : t.parent())
    edges.emplace_back(make_edge({End{p, EndSym::arrow}, End{c, EndSym::plain}}), 1);
  return Mhg::make(t.vertices(), std::move(edges), /*oriented=*/true, t.root());
}

GraphComb rooted_tree_to_graph(const TreeComb& w) {
  return w.map_basis([](const RootedTree& t) { return rooted_tree_to_graph(t); });
}

RootedTree rooted_tree_from_graph(const Mhg& g) {
  if (!g.oriented() || !g.root()) fail_input("expected a rooted oriented tree image");
  std::vector<Label> verts = g.vertices();
  std::map<Label, Label> parent;
  for (const auto& [e, m] : g.edges()) {
    if (m != 1 || e.degree() != 2 || e.is_loop() || e.ends.size() != 2)
      fail_input("not the image of a rooted tree");
    const End& first = e.ends.front().first;
    const End& second = e.ends.back().first;
    const End* par = nullptr;
    const End* child = nullptr;
    if (first.sym == EndSym::arrow && second.sym == EndSym::plain) {
      par = &first;
      child = &second;
    } else if (first.sym == EndSym::plain && second.sym == EndSym::arrow) {
      par = &second;
      child = &first;
    } else {
      fail_input("not the image of a rooted tree");
    }
    if (parent.count(child->v)) fail_input("not the image of a rooted tree");
    parent[child->v] = par->v;
  }
  return RootedTree::make(std::move(verts), *g.root(), std::move(parent));
}

}  // namespace oforge
