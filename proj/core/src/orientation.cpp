#include "oforge/orientation.hpp"

#include "oforge/error.hpp"

namespace oforge {

Mhg st_element(const Mhg& g, const Mhg& t, const Label& r) {
  if (!g.is_connected()) fail_input("st_element requires a connected multigraph");
  return orient_by_tree(g, t, r).with_root(r);
}

GraphComb o1_element(const Mhg& g, const std::map<Label, Mhg>& tree_for_root) {
  GraphComb out;
  for (const auto& r : g.vertices()) {
    auto it = tree_for_root.find(r);
    if (it == tree_for_root.end()) fail_input("o1_element: missing spanning tree for root " + r);
    out.add_term(st_element(g, it->second, r), Rational(1));
  }
  return out;
}

GraphComb o2_element(const Mhg& g, const Mhg& t1, const Mhg& t2, const Label& r) {
  GraphComb out;
  out.add_term(st_element(g, t1, r), Rational(1));
  out.add_term(st_element(g, t2, r), Rational(-1));
  return out;
}

GraphComb u_times_id(const GraphComb& w) { return forget_orientation(w); }

}  // namespace oforge
