#include "oforge/operad.hpp"

#include <array>

#include "oforge/error.hpp"

namespace oforge {

namespace {

bool carrier_mg(const Mhg& g) { return !g.oriented() && !g.root() && g.is_multigraph(); }
bool carrier_g(const Mhg& g) { return !g.oriented() && !g.root() && g.is_graph(); }
bool carrier_gc(const Mhg& g) { return carrier_g(g) && g.is_connected(); }
bool carrier_mgc(const Mhg& g) { return carrier_mg(g) && g.is_connected(); }
bool carrier_t(const Mhg& g) { return !g.oriented() && !g.root() && g.is_tree(); }
bool carrier_gpointed(const Mhg& g) { return !g.oriented() && g.root() && g.is_graph(); }
bool carrier_mgor(const Mhg& g) { return g.oriented() && g.root() && g.is_multigraph(); }

const std::array<OperadInstance, 7>& instances() {
  static const std::array<OperadInstance, 7> table = {{
      {"mg", "multigraphs, ends reconnect to every vertex", false, false,
       {{EndSym::plain, EndPolicy::sum_all_vertices}}, carrier_mg},
      {"g", "simple graphs", false, false,
       {{EndSym::plain, EndPolicy::sum_all_vertices}}, carrier_g},
      {"gc", "connected simple graphs", false, false,
       {{EndSym::plain, EndPolicy::sum_all_vertices}}, carrier_gc},
      {"mgc", "connected multigraphs", false, false,
       {{EndSym::plain, EndPolicy::sum_all_vertices}}, carrier_mgc},
      {"t", "trees", false, false,
       {{EndSym::plain, EndPolicy::sum_all_vertices}}, carrier_t},
      {"gpointed", "rooted simple graphs, ends reconnect to the root", false, true,
       {{EndSym::plain, EndPolicy::root_vertex}}, carrier_gpointed},
      {"mgor", "rooted oriented multigraphs", true, true,
       {{EndSym::plain, EndPolicy::root_vertex}, {EndSym::arrow, EndPolicy::sum_all_vertices}},
       carrier_mgor},
  }};
  return table;
}

}  // namespace

const OperadInstance& operad_instance(const std::string& name) {
  for (const auto& op : instances())
    if (op.name == name) return op;
  fail_input("unknown operad instance: " + name);
}

std::vector<std::string> operad_names() {
  std::vector<std::string> names;
  for (const auto& op : instances()) names.push_back(op.name);
  return names;
}

Mhg operad_unit(const OperadInstance& op, const Label& v) {
  return empty_graph({v}, op.oriented, op.rooted ? std::optional<Label>(v) : std::nullopt);
}

GraphComb compose(const OperadInstance& op, const GraphComb& x, const Label& star,
                  const GraphComb& y) {
  GraphComb result;
  for (const auto& [gx, cx] : x.terms()) {
    if (!op.in_carrier(gx))
      fail_carrier("left operand outside the '" + op.name + "' carrier: " + gx.to_text());
    if (!gx.has_vertex(star)) fail_input("star vertex '" + star + "' absent from left operand");
    for (const auto& [gy, cy] : y.terms()) {
      if (!op.in_carrier(gy))
        fail_carrier("right operand outside the '" + op.name + "' carrier: " + gy.to_text());

      std::map<EndSym, EndReplacement> repl;
      for (const auto& [sym, pol] : op.policy) {
        EndReplacement r;
        if (pol == EndPolicy::sum_all_vertices) {
          for (const auto& v : gy.vertices()) r.emplace_back(v, Rational(1));
        } else {
          r.emplace_back(*gy.root(), Rational(1));
        }
        repl.emplace(sym, std::move(r));
      }

      std::optional<Label> out_root;
      if (op.rooted) out_root = (*gx.root() == star) ? *gy.root() : *gx.root();

      GraphComb sub = substitute(gx, star, repl, gy);
      Rational c = cx * cy;
      for (const auto& [g, k] : sub.terms())
        result.add_term(op.rooted ? g.with_root(out_root) : g, c * k);
    }
  }
  return result;
}

GraphComb compose(const OperadInstance& op, const Mhg& x, const Label& star, const Mhg& y) {
  return compose(op, GraphComb::basis(x), star, GraphComb::basis(y));
}

}  // namespace oforge
