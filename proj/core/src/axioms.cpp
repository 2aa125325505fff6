#include "oforge/axioms.hpp"

#include <functional>

#include "oforge/enumerate.hpp"
#include "oforge/plie.hpp"

namespace oforge {

namespace {

std::vector<Label> pool(const std::string& prefix, int n) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// The checker is generic over the element type so that the graph instances
// and the pre-Lie rooted trees share one implementation.
template <class E>
struct Ops {
  std::function<LinComb<E>(const LinComb<E>&, const Label&, const LinComb<E>&)> compose;
  std::function<E(const E&, const std::map<Label, Label>&)> relabel;
  std::function<E(const Label&)> unit;
  std::function<std::vector<E>(const std::vector<Label>&)> enumerate;
  std::function<E(const std::vector<Label>&, Rng&)> random;
  std::function<std::string(const E&)> text;
};

template <class E>
class Checker {
 public:
  Checker(Ops<E> ops, const AxiomConfig& cfg) : ops_(std::move(ops)), cfg_(cfg) {}

  AxiomReport run() {
    exhaustive();
    randomized();
    return std::move(report_);
  }

 private:
  using Comb = LinComb<E>;

  void note(const std::string& law, const E& x, const E& y) {
    if (report_.violations.size() < 16)
      report_.violations.push_back(law + ": " + ops_.text(x) + " / " + ops_.text(y));
  }

  void check_left_unit(const E& plain, const Label& hole) {
    // e(*) o_* g = g
    Comb left = ops_.compose(Comb::basis(ops_.unit(hole)), hole, Comb::basis(plain));
    ++report_.left_units;
    if (left != Comb::basis(plain)) note("left unit", plain, plain);
  }

  void check_right_unit(const E& holed, const Label& hole) {
    // g o_* e(v) = g relabelled * -> v
    std::map<Label, Label> sigma;
    for (const auto& l : labels_of(holed)) sigma[l] = l;
    sigma[hole] = "v";
    Comb right = ops_.compose(Comb::basis(holed), hole, Comb::basis(ops_.unit("v")));
    ++report_.right_units;
    if (right != Comb::basis(ops_.relabel(holed, sigma))) note("right unit", holed, holed);
  }

  void check_sequential(const E& x, const E& y, const E& z) {
    Comb xy = ops_.compose(Comb::basis(x), "*1", Comb::basis(y));
    Comb lhs = ops_.compose(xy, "*2", Comb::basis(z));
    Comb yz = ops_.compose(Comb::basis(y), "*2", Comb::basis(z));
    Comb rhs = ops_.compose(Comb::basis(x), "*1", yz);
    ++report_.sequential;
    if (lhs != rhs) note("sequential", x, y);
  }

  void check_parallel(const E& x, const E& y, const E& z) {
    Comb lhs = ops_.compose(ops_.compose(Comb::basis(x), "*1", Comb::basis(y)), "*2",
                            Comb::basis(z));
    Comb rhs = ops_.compose(ops_.compose(Comb::basis(x), "*2", Comb::basis(z)), "*1",
                            Comb::basis(y));
    ++report_.parallel;
    if (lhs != rhs) note("parallel", x, y);
  }

  std::vector<Label> labels_of(const E& e) const;

  void exhaustive() {
    // Unit laws over every carrier element.
    for (int k = 1; k <= cfg_.exhaustive_x_arity; ++k) {
      for (const auto& e : ops_.enumerate(pool("u", k))) check_left_unit(e, "*");
      std::vector<Label> holed = pool("u", k - 1);
      holed.push_back("*");
      for (const auto& x : ops_.enumerate(holed)) check_right_unit(x, "*");
    }

    // Sequential diagram: x on {*1}+A, y on {*2}+B, z on C.
    for (int a = 1; a <= cfg_.exhaustive_x_arity; ++a)
      for (int b = 1; b <= cfg_.exhaustive_y_arity; ++b)
        for (int c = 1; c <= cfg_.exhaustive_z_arity; ++c) {
          std::vector<Label> la = pool("a", a - 1);
          la.push_back("*1");
          std::vector<Label> lb = pool("b", b - 1);
          lb.push_back("*2");
          auto xs = ops_.enumerate(la);
          auto ys = ops_.enumerate(lb);
          auto zs = ops_.enumerate(pool("c", c));
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& z : zs) check_sequential(x, y, z);
        }

    // Parallel diagram: x on {*1,*2}+A.
    for (int a = 2; a <= cfg_.exhaustive_x_arity; ++a)
      for (int b = 1; b <= cfg_.exhaustive_y_arity; ++b)
        for (int c = 1; c <= cfg_.exhaustive_z_arity; ++c) {
          std::vector<Label> la = pool("a", a - 2);
          la.push_back("*1");
          la.push_back("*2");
          auto xs = ops_.enumerate(la);
          auto ys = ops_.enumerate(pool("b", b));
          auto zs = ops_.enumerate(pool("c", c));
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& z : zs) check_parallel(x, y, z);
        }
  }

  void randomized() {
    Rng rng(cfg_.seed);
    std::uniform_int_distribution<int> arity(1, 3);
    for (int i = 0; i < cfg_.random_cases; ++i) {
      int ax, ay, az;
      do {
        ax = arity(rng);
        ay = arity(rng);
        az = arity(rng);
      } while (ax + ay + az - 2 > cfg_.random_total_vertices);

      std::vector<Label> la = pool("a", ax - 1);
      la.push_back("*1");
      std::vector<Label> lb = pool("b", ay - 1);
      lb.push_back("*2");
      E x = ops_.random(la, rng);
      E y = ops_.random(lb, rng);
      E z = ops_.random(pool("c", az), rng);
      check_sequential(x, y, z);

      if (ax >= 2) {
        std::vector<Label> lp = pool("a", ax - 2);
        lp.push_back("*1");
        lp.push_back("*2");
        E xp = ops_.random(lp, rng);
        E yp = ops_.random(pool("b", ay), rng);
        check_parallel(xp, yp, z);
      }
      check_left_unit(z, "*");
      check_right_unit(x, "*1");
    }
  }

  Ops<E> ops_;
  AxiomConfig cfg_;
  AxiomReport report_;
};

template <>
std::vector<Label> Checker<Mhg>::labels_of(const Mhg& e) const {
  return e.vertices();
}
template <>
std::vector<Label> Checker<RootedTree>::labels_of(const RootedTree& e) const {
  return e.vertices();
}

}  // namespace

AxiomReport check_axioms(const OperadInstance& op, const AxiomConfig& cfg) {
  Ops<Mhg> ops;
  ops.compose = [&op](const GraphComb& x, const Label& s, const GraphComb& y) {
    return compose(op, x, s, y);
  };
  ops.relabel = [](const Mhg& g, const std::map<Label, Label>& sigma) { return relabel(g, sigma); };
  ops.unit = [&op](const Label& v) { return operad_unit(op, v); };
  ops.enumerate = [&op, &cfg](const std::vector<Label>& verts) {
    return enumerate_carrier(op, verts, cfg.exhaustive_max_edges);
  };
  ops.random = [&op, &cfg](const std::vector<Label>& verts, Rng& rng) {
    return random_carrier(op, verts, rng, cfg.random_max_edges);
  };
  ops.text = [](const Mhg& g) { return g.to_text(); };
  return Checker<Mhg>(std::move(ops), cfg).run();
}

AxiomReport check_axioms_plie(const AxiomConfig& cfg) {
  Ops<RootedTree> ops;
  ops.compose = [](const TreeComb& x, const Label& s, const TreeComb& y) {
    return plie_compose(x, s, y);
  };
  ops.relabel = [](const RootedTree& t, const std::map<Label, Label>& sigma) {
    return relabel(t, sigma);
  };
  ops.unit = [](const Label& v) { return tree_unit(v); };
  ops.enumerate = [](const std::vector<Label>& verts) { return enumerate_rooted_trees(verts); };
  ops.random = [](const std::vector<Label>& verts, Rng& rng) {
    return random_rooted_tree(verts, rng);
  };
  ops.text = [](const RootedTree& t) { return t.to_text(); };
  return Checker<RootedTree>(std::move(ops), cfg).run();
}

}  // namespace oforge
