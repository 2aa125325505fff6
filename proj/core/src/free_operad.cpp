#include "oforge/free_operad.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "oforge/error.hpp"

namespace oforge {

using nlohmann::json;

bool is_dual(GenSym g) { return g == GenSym::p_dual || g == GenSym::s_dual; }

GenSym dual_of(GenSym g) {
  switch (g) {
    case GenSym::p: return GenSym::p_dual;
    case GenSym::s: return GenSym::s_dual;
    case GenSym::p_dual: return GenSym::p;
    case GenSym::s_dual: return GenSym::s;
  }
  fail_input("bad generator symbol");
}

char gen_char(GenSym g) {
  switch (g) {
    case GenSym::p: return 'p';
    case GenSym::s: return 's';
    case GenSym::p_dual: return 'P';
    case GenSym::s_dual: return 'S';
  }
  fail_input("bad generator symbol");
}

std::string gen_name(GenSym g) {
  switch (g) {
    case GenSym::p: return "p";
    case GenSym::s: return "s";
    case GenSym::p_dual: return "p*";
    case GenSym::s_dual: return "s*";
  }
  fail_input("bad generator symbol");
}

GenSym gen_from_name(const std::string& name) {
  if (name == "p") return GenSym::p;
  if (name == "s") return GenSym::s;
  if (name == "p*") return GenSym::p_dual;
  if (name == "s*") return GenSym::s_dual;
  fail_parse("unknown generator '" + name + "'");
}

namespace {

void append_label(std::string& out, const Label& l) {
  out += std::to_string(l.size());
  out += ':';
  out += l;
}

std::string node_key(const EnrichedTree::Node& n) {
  if (n.leaf) {
    std::string k = "L";
    append_label(k, n.label);
    return k;
  }
  std::string k = "N";
  k += gen_char(n.gen);
  k += '(';
  for (const auto& c : n.children) k += node_key(c);
  k += ')';
  return k;
}

void collect_leaves(const EnrichedTree::Node& n, std::vector<Label>& out) {
  if (n.leaf) {
    out.push_back(n.label);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

int count_internal(const EnrichedTree::Node& n) {
  if (n.leaf) return 0;
  int k = 1;
  for (const auto& c : n.children) k += count_internal(c);
  return k;
}

bool family_dual(const EnrichedTree::Node& n, bool& found, bool& dual) {
  if (n.leaf) return true;
  if (!found) {
    found = true;
    dual = is_dual(n.gen);
  } else if (is_dual(n.gen) != dual) {
    return false;
  }
  for (const auto& c : n.children)
    if (!family_dual(c, found, dual)) return false;
  return true;
}

EnrichedTree::Node normalize(EnrichedTree::Node n) {
  if (n.leaf) return n;
  for (auto& c : n.children) c = normalize(std::move(c));
  std::sort(n.children.begin(), n.children.end(),
            [](const EnrichedTree::Node& a, const EnrichedTree::Node& b) {
              return node_key(a) < node_key(b);
            });
  return n;
}

}  // namespace

EnrichedTree EnrichedTree::make_leaf(const Label& l) {
  EnrichedTree t;
  t.root_.leaf = true;
  t.root_.label = l;
  t.key_ = node_key(t.root_);
  return t;
}

EnrichedTree EnrichedTree::make_node(GenSym g, const EnrichedTree& left, const EnrichedTree& right) {
  Node n;
  n.leaf = false;
  n.gen = g;
  n.children = {left.root_, right.root_};
  EnrichedTree t;
  t.root_ = normalize(std::move(n));
  t.key_ = node_key(t.root_);

  auto ls = t.leaves();
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    fail_input("enriched tree with repeated leaf labels");
  bool found = false, dual = false;
  if (!family_dual(t.root_, found, dual)) fail_input("mixed primal/dual generators in one tree");
  return t;
}

std::vector<Label> EnrichedTree::leaves() const {
  std::vector<Label> out;
  collect_leaves(root_, out);
  std::sort(out.begin(), out.end());
  return out;
}

int EnrichedTree::arity() const {
  std::vector<Label> out;
  collect_leaves(root_, out);
  return static_cast<int>(out.size());
}

int EnrichedTree::internal_nodes() const { return count_internal(root_); }

bool EnrichedTree::dual() const {
  bool found = false, dual = false;
  family_dual(root_, found, dual);
  return found && dual;
}

std::string EnrichedTree::to_text() const {
  std::function<std::string(const Node&)> rec = [&](const Node& n) -> std::string {
    if (n.leaf) return n.label;
    std::string s = gen_name(n.gen) + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) s += ",";
      s += rec(n.children[i]);
    }
    return s + ")";
  };
  return rec(root_);
}

namespace {

EnrichedTree from_node(const EnrichedTree::Node& n) {
  if (n.leaf) return EnrichedTree::make_leaf(n.label);
  EnrichedTree l = from_node(n.children[0]);
  EnrichedTree r = from_node(n.children[1]);
  return EnrichedTree::make_node(n.gen, l, r);
}

EnrichedTree::Node subst_node(const EnrichedTree::Node& n, const Label& star,
                              const EnrichedTree::Node& replacement, bool& hit) {
  if (n.leaf) {
    if (n.label == star) {
      hit = true;
      return replacement;
    }
    return n;
  }
  EnrichedTree::Node out = n;
  for (auto& c : out.children) c = subst_node(c, star, replacement, hit);
  return out;
}

}  // namespace

EnrichedTree free_compose(const EnrichedTree& t1, const Label& star, const EnrichedTree& t2) {
  auto l1 = t1.leaves();
  if (!std::binary_search(l1.begin(), l1.end(), star)) fail_input("free_compose: star leaf absent");
  bool hit = false;
  EnrichedTree::Node merged = subst_node(t1.root(), star, t2.root(), hit);
  return from_node(merged);  // re-canonicalises and re-validates
}

TreePoly free_compose(const TreePoly& x, const Label& star, const TreePoly& y) {
  TreePoly out;
  for (const auto& [t1, c1] : x.terms())
    for (const auto& [t2, c2] : y.terms()) out.add_term(free_compose(t1, star, t2), c1 * c2);
  return out;
}

int sign_of(const std::map<Label, Label>& sigma, const std::vector<Label>& domain) {
  std::vector<Label> images;
  images.reserve(domain.size());
  for (const auto& d : domain) {
    auto it = sigma.find(d);
    if (it == sigma.end()) fail_input("sign_of: map not total on the domain");
    images.push_back(it->second);
  }
  std::vector<Label> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail_input("sign_of: map not injective");
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[j] < images[i]) sign = -sign;
  return sign;
}

namespace {

EnrichedTree::Node relabel_node(const EnrichedTree::Node& n, const std::map<Label, Label>& sigma) {
  EnrichedTree::Node out = n;
  if (out.leaf) {
    auto it = sigma.find(out.label);
    if (it == sigma.end()) fail_input("act: no image for leaf '" + out.label + "'");
    out.label = it->second;
    return out;
  }
  for (auto& c : out.children) c = relabel_node(c, sigma);
  return out;
}

}  // namespace

TreePoly act(const std::map<Label, Label>& sigma, const EnrichedTree& t) {
  EnrichedTree image = from_node(relabel_node(t.root(), sigma));
  Rational coeff(1);
  if (t.dual()) coeff = Rational(sign_of(sigma, t.leaves()));
  return TreePoly::basis(image, coeff);
}

TreePoly act(const std::map<Label, Label>& sigma, const TreePoly& w) {
  TreePoly out;
  for (const auto& [t, c] : w.terms()) out += act(sigma, t).scaled(c);
  return out;
}

std::vector<EnrichedTree> enumerate_trees(const std::vector<Label>& leaves, bool dual) {
  std::vector<Label> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  const GenSym gens[2] = {dual ? GenSym::p_dual : GenSym::p, dual ? GenSym::s_dual : GenSym::s};

  std::function<std::vector<EnrichedTree>(const std::vector<Label>&)> rec =
      [&](const std::vector<Label>& ls) -> std::vector<EnrichedTree> {
    if (ls.size() == 1) return {EnrichedTree::make_leaf(ls[0])};
    std::vector<EnrichedTree> out;
    // Unordered splits: the part holding the least leaf, proper and nonempty.
    int n = static_cast<int>(ls.size());
    for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
      std::vector<Label> a{ls[0]}, b;
      for (int i = 1; i < n; ++i) ((mask >> (i - 1)) & 1 ? a : b).push_back(ls[i]);
      auto ta = rec(a);
      auto tb = rec(b);
      for (GenSym g : gens)
        for (const auto& x : ta)
          for (const auto& y : tb) out.push_back(EnrichedTree::make_node(g, x, y));
    }
    return out;
  };
  std::vector<EnrichedTree> out = rec(sorted);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EnrichedTree> enumerate_weight2(const std::vector<Label>& leaves, bool dual) {
  if (leaves.size() == 3) {
    std::vector<Label> sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    const GenSym gens[2] = {dual ? GenSym::p_dual : GenSym::p, dual ? GenSym::s_dual : GenSym::s};
    std::vector<EnrichedTree> out;
    for (int lone = 0; lone < 3; ++lone) {
      Label x = sorted[lone];
      Label y = sorted[(lone + 1) % 3];
      Label z = sorted[(lone + 2) % 3];
      for (GenSym top : gens)
        for (GenSym bot : gens)
          out.push_back(EnrichedTree::make_node(
              top, EnrichedTree::make_leaf(x),
              EnrichedTree::make_node(bot, EnrichedTree::make_leaf(y), EnrichedTree::make_leaf(z))));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<EnrichedTree> out;
  for (const auto& t : enumerate_trees(leaves, dual))
    if (t.internal_nodes() == 2) out.push_back(t);
  return out;
}

namespace {

struct TwoLevel {
  GenSym top;
  Label lone;
  GenSym bottom;
};

TwoLevel decompose_weight2(const EnrichedTree& t) {
  const auto& r = t.root();
  if (r.leaf || t.internal_nodes() != 2 || t.arity() != 3)
    fail_input("expected an arity-3 tree with two internal nodes");
  const EnrichedTree::Node* leaf_child = nullptr;
  const EnrichedTree::Node* node_child = nullptr;
  for (const auto& c : r.children) (c.leaf ? leaf_child : node_child) = &c;
  if (!leaf_child || !node_child) fail_input("unexpected weight-2 tree shape");
  return TwoLevel{r.gen, leaf_child->label, node_child->gen};
}

}  // namespace

Rational koszul_pairing(const TreePoly& dual_side, const TreePoly& primal_side) {
  Rational total(0);
  for (const auto& [f, cf] : dual_side.terms()) {
    if (!f.dual()) fail_input("koszul_pairing: left side must be dual");
    TwoLevel df = decompose_weight2(f);
    for (const auto& [x, cx] : primal_side.terms()) {
      if (x.dual()) fail_input("koszul_pairing: right side must be primal");
      if (f.leaves() != x.leaves()) fail_input("koszul_pairing: mismatched leaf sets");
      TwoLevel dx = decompose_weight2(x);
      if (df.lone == dx.lone && dual_of(df.top) == dx.top && dual_of(df.bottom) == dx.bottom)
        total += cf * cx;
    }
  }
  return total;
}

RowSpace<EnrichedTree> relation_space(const std::vector<TreePoly>& relations) {
  RowSpace<EnrichedTree> rs;
  if (relations.empty()) return rs;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    const EnrichedTree& first = r.terms().begin()->first;
    auto leaves = first.leaves();
    if (leaves.size() != 3) fail_input("relation_space expects arity-3 relations");
    for (const auto& [t, c] : r.terms())
      if (t.leaves() != leaves || t.internal_nodes() != 2)
        fail_input("relation is not weight-2 homogeneous");
    std::vector<Label> perm = leaves;
    std::sort(perm.begin(), perm.end());
    do {
      rs.insert(act(bijection(leaves, perm), r));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return rs;
}

std::vector<TreePoly> orthogonal(const RowSpace<EnrichedTree>& R, const std::vector<Label>& leaves) {
  std::vector<EnrichedTree> dual_basis = enumerate_weight2(leaves, /*dual=*/true);
  auto rows = R.basis();
  const std::size_t m = rows.size();
  const std::size_t d = dual_basis.size();

  // mat[j][i] = <e_i^dual, row_j>; kernel vectors alpha give the annihilator.
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i)
      mat[j][i] = koszul_pairing(TreePoly::basis(dual_basis[i]), rows[j]);

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && mat[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(mat[sel], mat[row]);
    Rational inv = Rational(1) / mat[row][col];
    for (auto& v : mat[row]) v *= inv;
    for (std::size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == row || mat[r2][col] == 0) continue;
      Rational f = mat[r2][col];
      for (std::size_t i = 0; i < d; ++i) mat[r2][i] -= f * mat[row][i];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<TreePoly> kernel;
  std::set<std::size_t> pivots(pivot_col.begin(), pivot_col.end());
  for (std::size_t free_col = 0; free_col < d; ++free_col) {
    if (pivots.count(free_col)) continue;
    TreePoly vec = TreePoly::basis(dual_basis[free_col]);
    for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2)
      vec.add_term(dual_basis[pivot_col[r2]], -mat[r2][free_col]);
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

namespace {

TreePoly two_level(GenSym top, const Label& lone, GenSym bottom, const Label& u, const Label& v,
                   const Rational& coeff = Rational(1)) {
  return TreePoly::basis(
      EnrichedTree::make_node(top, EnrichedTree::make_leaf(lone),
                              EnrichedTree::make_node(bottom, EnrichedTree::make_leaf(u),
                                                      EnrichedTree::make_leaf(v))),
      coeff);
}

}  // namespace

std::vector<TreePoly> sp_relations(const Label& a, const Label& b, const Label& c) {
  using G = GenSym;
  TreePoly r1 = two_level(G::p, c, G::p, a, b) - two_level(G::p, a, G::p, b, c);
  TreePoly r2 = two_level(G::s, a, G::p, b, c) - two_level(G::p, c, G::s, a, b) -
                two_level(G::p, b, G::s, a, c);
  return {r1, r2};
}

std::vector<TreePoly> sp_dual_relations(const Label& a, const Label& b, const Label& c) {
  using G = GenSym;
  TreePoly r1 = two_level(G::s_dual, a, G::s_dual, b, c);
  TreePoly r2 = two_level(G::p_dual, a, G::s_dual, b, c) + two_level(G::s_dual, c, G::p_dual, a, b) +
                two_level(G::s_dual, b, G::p_dual, a, c);
  TreePoly r3 = two_level(G::p_dual, a, G::p_dual, b, c) + two_level(G::p_dual, c, G::p_dual, a, b) +
                two_level(G::p_dual, b, G::p_dual, c, a);
  return {r1, r2, r3};
}

namespace {

void symmetric_close_trees(RowSpace<EnrichedTree>& rs, const std::vector<Label>& labels) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& row : rs.basis()) {
      for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        std::map<Label, Label> tau;
        for (const auto& l : labels) tau[l] = l;
        tau[labels[i]] = labels[i + 1];
        tau[labels[i + 1]] = labels[i];
        if (rs.insert(act(tau, row))) grew = true;
      }
    }
  }
}

}  // namespace

RowSpace<EnrichedTree> ideal_span(const std::vector<TreePoly>& relations, int arity) {
  if (arity < 3) return {};
  // Arity 3: orbit span of the relations, on canonical labels.
  RowSpace<EnrichedTree> current;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    auto leaves = r.terms().begin()->first.leaves();
    current.insert(act(bijection(leaves, canonical_labels(3)), r));
  }
  symmetric_close_trees(current, canonical_labels(3));
  if (arity == 3) return current;

  const GenSym gens[2] = {GenSym::p, GenSym::s};
  for (int n = 4; n <= arity; ++n) {
    auto target = canonical_labels(n);
    auto source = canonical_labels(n - 1);
    RowSpace<EnrichedTree> next;

    for (const auto& b : current.basis()) {
      // Graft a generator on top: one new leaf joins the ideal element.
      for (int lone = 0; lone < n; ++lone) {
        std::vector<Label> rest;
        for (int i = 0; i < n; ++i)
          if (i != lone) rest.push_back(target[i]);
        TreePoly moved = act(bijection(source, rest), b);
        for (GenSym g : gens) {
          TreePoly sum;
          for (const auto& [t, c] : moved.terms())
            sum.add_term(EnrichedTree::make_node(g, EnrichedTree::make_leaf(target[lone]),
                                                 from_node(t.root())),
                         c);
          next.insert(sum);
        }
      }
      // Graft a generator under one leaf of the ideal element.
      for (const auto& hole : source) {
        std::vector<int> comb{0, 1};
        auto advance = [&]() {
          if (comb[1] + 1 < n) {
            ++comb[1];
            return true;
          }
          if (comb[0] + 2 < n) {
            ++comb[0];
            comb[1] = comb[0] + 1;
            return true;
          }
          return false;
        };
        do {
          std::vector<Label> rest;
          std::vector<bool> used(n, false);
          used[comb[0]] = used[comb[1]] = true;
          for (int i = 0; i < n; ++i)
            if (!used[i]) rest.push_back(target[i]);
          std::map<Label, Label> sigma;
          int k = 0;
          for (const auto& l : source) sigma[l] = (l == hole) ? "*" : rest[k++];
          TreePoly moved = act(sigma, b);
          for (GenSym g : gens) {
            EnrichedTree pair = EnrichedTree::make_node(g, EnrichedTree::make_leaf(target[comb[0]]),
                                                        EnrichedTree::make_leaf(target[comb[1]]));
            next.insert(free_compose(moved, "*", TreePoly::basis(pair)));
          }
        } while (advance());
      }
    }
    symmetric_close_trees(next, target);
    current = std::move(next);
  }
  return current;
}

json tree_to_json(const EnrichedTree& t) {
  std::function<json(const EnrichedTree::Node&)> rec = [&](const EnrichedTree::Node& n) -> json {
    if (n.leaf) return json{{"leaf", n.label}};
    json children = json::array();
    for (const auto& c : n.children) children.push_back(rec(c));
    return json{{"gen", gen_name(n.gen)}, {"children", children}};
  };
  return rec(t.root());
}

std::pair<EnrichedTree, Rational> tree_from_json(const json& j) {
  Rational sign(1);
  std::function<EnrichedTree(const json&)> rec = [&](const json& node) -> EnrichedTree {
    if (!node.is_object()) fail_parse("tree nodes must be JSON objects");
    if (node.contains("leaf")) {
      if (!node["leaf"].is_string()) fail_parse("'leaf' must be a string");
      return EnrichedTree::make_leaf(node["leaf"].get<std::string>());
    }
    if (!node.contains("gen") || !node["gen"].is_string()) fail_parse("internal node needs 'gen'");
    GenSym g = gen_from_name(node["gen"].get<std::string>());
    if (node.contains("sign")) {
      if (!is_dual(g)) fail_parse("'sign' is only meaningful on dual nodes");
      int s = node["sign"].get<int>();
      if (s != 1 && s != -1) fail_parse("'sign' must be 1 or -1");
      sign *= s;
    }
    if (!node.contains("children") || !node["children"].is_array() || node["children"].size() != 2)
      fail_parse("internal node needs exactly two children");
    EnrichedTree l = rec(node["children"][0]);
    EnrichedTree r = rec(node["children"][1]);
    return EnrichedTree::make_node(g, l, r);
  };
  EnrichedTree t = rec(j);
  return {t, sign};
}

json tree_poly_to_json(const TreePoly& w) {
  json terms = json::array();
  for (const auto& [t, c] : w.terms())
    terms.push_back(json{{"coeff", to_string(c)}, {"tree", tree_to_json(t)}});
  return json{{"terms", terms}};
}

TreePoly tree_poly_from_json(const json& j) {
  TreePoly w;
  if (j.is_object() && j.contains("terms")) {
    for (const auto& term : j["terms"]) {
      if (!term.is_object() || !term.contains("tree")) fail_parse("term needs a 'tree'");
      Rational c(1);
      if (term.contains("coeff")) {
        if (term["coeff"].is_string())
          c = parse_rational(term["coeff"].get<std::string>());
        else if (term["coeff"].is_number_integer())
          c = Rational(term["coeff"].get<long long>());
        else
          fail_parse("'coeff' must be a string or integer");
      }
      auto [t, sign] = tree_from_json(term["tree"]);
      w.add_term(t, c * sign);
    }
    return w;
  }
  auto [t, sign] = tree_from_json(j);
  w.add_term(t, sign);
  return w;
}

}  // namespace oforge
