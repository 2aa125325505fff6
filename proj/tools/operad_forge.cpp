// operad-forge: exact computations in graph insertion operads.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <set>
#include <string>

#include "oforge/closure.hpp"
#include "oforge/egf.hpp"
#include "oforge/error.hpp"
#include "oforge/free_operad.hpp"
#include "oforge/graph_json.hpp"
#include "oforge/plie.hpp"
#include "oforge/verify.hpp"

namespace {

using namespace oforge;
using nlohmann::json;

struct GlobalOpts {
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_arity = 6;
  bool unsafe_arity = false;
};

int arity_cap(const GlobalOpts& g) {
  if (g.max_arity > 6 && !g.unsafe_arity)
    fail_bound("arity cap above 6 requires --unsafe-arity");
  return g.max_arity;
}

void print_comb(const GraphComb& w, const GlobalOpts& opts, const json& extra = json::object()) {
  if (opts.format == "json") {
    json out = comb_to_json(w);
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump() << "\n";
    return;
  }
  for (auto it = extra.begin(); it != extra.end(); ++it)
    std::cout << "# " << it.key() << ": " << it.value().dump() << "\n";
  if (w.is_zero()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [g, c] : w.terms()) std::cout << to_string(c) << "  " << g.to_text() << "\n";
}

// Renames the right operand's vertices away from the left's; the renaming is
// reported so results stay interpretable.
GraphComb auto_rename(const GraphComb& x, const Label& star, GraphComb y, json& renamed) {
  std::set<Label> used;
  for (const auto& [g, c] : x.terms())
    for (const auto& v : g.vertices()) used.insert(v);
  if (y.is_zero()) return y;
  const auto& yverts = y.terms().begin()->first.vertices();
  std::map<Label, Label> sigma;
  bool any = false;
  for (const auto& v : yverts) {
    Label target = v;
    if (v != star && used.count(target)) {
      int k = 1;
      while (used.count(target + "_" + std::to_string(k))) ++k;
      target = target + "_" + std::to_string(k);
      any = true;
    }
    sigma[v] = target;
    used.insert(target);
  }
  if (!any) return y;
  for (const auto& [from, to] : sigma)
    if (from != to) renamed[from] = to;
  std::cerr << "note: renamed overlapping vertices of the right operand\n";
  return relabel(y, sigma);
}

std::vector<GraphComb> load_generators(const std::string& path) {
  json j = load_json_file(path);
  std::vector<GraphComb> gens;
  const json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.is_object() && j.contains("generators") && j["generators"].is_array())
    arr = &j["generators"];
  else
    fail_parse("generator file must be an array or contain a 'generators' array");
  for (const auto& entry : *arr) gens.push_back(comb_from_json(entry));
  return gens;
}

// Rooted trees travel as plain tree graphs with a "root" field.
TreeComb tree_comb_of(const GraphComb& w) {
  TreeComb out;
  for (const auto& [g, c] : w.terms()) {
    if (g.oriented() || !g.root() || !g.is_tree())
      fail_carrier("expected a plain tree with a root: " + g.to_text());
    out.add_term(root_tree(g, *g.root()), c);
  }
  return out;
}

GraphComb graph_comb_of(const TreeComb& w) {
  GraphComb out;
  for (const auto& [t, c] : w.terms()) {
    std::vector<std::pair<Edge, int>> edges;
    for (const auto& [child, parent] : t.parent())
      edges.emplace_back(plain_edge(parent, child), 1);
    out.add_term(Mhg::make(t.vertices(), std::move(edges), false, t.root()), c);
  }
  return out;
}

int cmd_compose(const GlobalOpts& opts, const std::string& op_name, const std::string& left,
                const std::string& star, const std::string& right) {
  GraphComb x = comb_from_json(load_json_file(left));
  GraphComb y = comb_from_json(load_json_file(right));
  json renamed = json::object();
  y = auto_rename(x, star, y, renamed);
  GraphComb result;
  if (op_name == "plie") {
    result = graph_comb_of(plie_compose(tree_comb_of(x), star, tree_comb_of(y)));
  } else {
    result = compose(operad_instance(op_name), x, star, y);
  }
  json extra = json::object();
  extra["operad"] = op_name;
  if (!renamed.empty()) extra["renamed"] = renamed;
  print_comb(result, opts, extra);
  return 0;
}

int cmd_verify(const GlobalOpts& opts, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    for (const auto& name : verify_suite_names()) results.push_back(run_verify_suite(name, opts.seed));
  } else {
    results.push_back(run_verify_suite(suite, opts.seed));
  }

  bool all_ok = true;
  if (opts.format == "json") {
    json out = json::array();
    for (const auto& r : results) {
      json checks = json::array();
      for (const auto& c : r.checks) {
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all_ok = all_ok && c.pass;
      }
      out.push_back(json{{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    }
    std::cout << json{{"seed", opts.seed}, {"suites", out}}.dump() << "\n";
  } else {
    for (const auto& r : results) {
      for (const auto& c : r.checks) {
        std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        all_ok = all_ok && c.pass;
      }
    }
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_closure(const GlobalOpts& opts, const std::string& op_name, const std::string& gens_path,
                std::optional<int> max_edges, unsigned threads) {
  const auto& op = operad_instance(op_name);
  ClosureConfig cfg;
  cfg.max_arity = arity_cap(opts);
  cfg.unsafe_arity = opts.unsafe_arity;
  cfg.max_edges = max_edges;
  cfg.threads = threads;
  ClosureTable table = closure(op, load_generators(gens_path), cfg);
  auto dims = table.dims();
  if (opts.format == "json") {
    json out;
    out["operad"] = op_name;
    json d = json::array();
    for (std::size_t i = 0; i < dims.size(); ++i)
      d.push_back(json{{"arity", i + 1}, {"dim", dims[i]}});
    out["dimensions"] = d;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "arity  dim\n";
    for (std::size_t i = 0; i < dims.size(); ++i)
      std::cout << i + 1 << "      " << dims[i] << "\n";
  }
  return 0;
}

int cmd_membership(const GlobalOpts& opts, const std::string& op_name, const std::string& gens_path,
                   const std::string& target_path, std::optional<int> max_edges, unsigned threads) {
  const auto& op = operad_instance(op_name);
  ClosureConfig cfg;
  cfg.max_arity = arity_cap(opts);
  cfg.unsafe_arity = opts.unsafe_arity;
  cfg.max_edges = max_edges;
  cfg.threads = threads;
  ClosureTable table = closure(op, load_generators(gens_path), cfg);
  GraphComb target = comb_from_json(load_json_file(target_path));
  bool member = membership(table, target);
  if (opts.format == "json")
    std::cout << json{{"member", member}}.dump() << "\n";
  else
    std::cout << (member ? "member" : "not a member") << "\n";
  return member ? 0 : 1;
}

int cmd_generators(const GlobalOpts& opts, const std::string& op_name, int arity) {
  if (op_name != "g" && op_name != "t")
    fail_input("generator reports are available for the 'g' and 't' instances");
  if (arity < 2) fail_bound("generator reports start at arity 2");
  if (arity > arity_cap(opts)) fail_bound("arity exceeds the cap; raise --max-arity");

  const auto& op = operad_instance(op_name);
  ClosureConfig cfg;
  cfg.max_arity = arity;
  cfg.unsafe_arity = opts.unsafe_arity;
  ClosureTable table(op, cfg);
  table.span(1).insert(GraphComb::basis(operad_unit(op, "1")));
  AmbientEnum ambient = op_name == "g" ? ambient_simple_graphs() : ambient_trees();

  std::vector<GeneratorReport> reports;
  for (int n = 2; n <= arity; ++n) reports.push_back(generator_search(table, ambient, n));
  const GeneratorReport& rep = reports.back();

  if (opts.format == "json") {
    json shapes = json::array();
    for (const auto& s : rep.shapes)
      shapes.push_back(json{{"edges", s.edges},
                            {"rank_gain", s.rank_gain},
                            {"representative", graph_to_json(s.representative)}});
    json out{{"operad", op_name},
             {"arity", rep.arity},
             {"ambient_dim", rep.ambient_dim},
             {"composable_dim", rep.composable_rank},
             {"generator_dim", rep.generator_dim()},
             {"shape_count", rep.shapes.size()},
             {"minimal", rep.minimal},
             {"shapes", shapes}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "operad " << op_name << ", arity " << rep.arity << "\n";
    std::cout << "ambient dim " << rep.ambient_dim << ", composable dim " << rep.composable_rank
              << ", generator dim " << rep.generator_dim() << "\n";
    std::cout << "generator shapes (" << rep.shapes.size()
              << (rep.minimal ? ", minimal under removal):" : "):") << "\n";
    for (const auto& s : rep.shapes)
      std::cout << "  edges=" << s.edges << " rank_gain=" << s.rank_gain << "  "
                << s.representative.to_text() << "\n";
  }
  return 0;
}

int cmd_pairing(const GlobalOpts& opts, const std::string& left_path, const std::string& right_path) {
  json lj = load_json_file(left_path);
  json rj = load_json_file(right_path);
  auto load_list = [](const json& j) {
    std::vector<TreePoly> out;
    if (j.is_array())
      for (const auto& e : j) out.push_back(tree_poly_from_json(e));
    else
      out.push_back(tree_poly_from_json(j));
    return out;
  };
  auto left = load_list(lj);
  auto right = load_list(rj);
  bool all_zero = true;
  json matrix = json::array();
  for (const auto& f : left) {
    json row = json::array();
    for (const auto& x : right) {
      Rational v = koszul_pairing(f, x);
      if (v != 0) all_zero = false;
      row.push_back(to_string(v));
    }
    matrix.push_back(row);
  }
  if (opts.format == "json") {
    std::cout << json{{"matrix", matrix}, {"all_zero", all_zero}}.dump() << "\n";
  } else {
    for (const auto& row : matrix) {
      for (const auto& v : row) std::cout << v.get<std::string>() << " ";
      std::cout << "\n";
    }
    std::cout << (all_zero ? "all pairings vanish" : "nonzero pairings present") << "\n";
  }
  return 0;
}

int cmd_hilbert(const GlobalOpts& opts, const std::string& series, int order) {
  TruncEgf f = [&] {
    if (series == "sp") return hilbert_sp(order);
    if (series == "sp-dual") return hilbert_sp_dual(order);
    if (series == "commag") return hilbert_commag(order);
    fail_input("unknown series '" + series + "' (sp, sp-dual, commag)");
  }();
  if (opts.format == "json") {
    json dims = json::array();
    for (int n = 1; n <= order; ++n)
      dims.push_back(json{{"n", n}, {"dim", f.dim(n).str()}});
    std::cout << json{{"series", series}, {"dims", dims}}.dump() << "\n";
  } else if (opts.format == "csv") {
    std::cout << "n,dim\n";
    for (int n = 1; n <= order; ++n) std::cout << n << "," << f.dim(n).str() << "\n";
  } else {
    std::cout << "n    dim\n";
    for (int n = 1; n <= order; ++n) std::cout << n << "    " << f.dim(n).str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for graph insertion operads"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts opts;
  app.add_option("--format", opts.format, "Output format: json, table (csv for hilbert)")
      ->default_val("json");
  app.add_option("--seed", opts.seed, "Seed for randomised suites")->default_val(1);
  app.add_option("--max-arity", opts.max_arity, "Arity cap for span computations")->default_val(6);
  app.add_flag("--unsafe-arity", opts.unsafe_arity, "Allow arity caps above 6");

  std::string op_name = "mg", left, right, star = "*", suite = "all", gens, target;
  std::string series = "sp-dual";
  int arity = 4, order = 12;
  std::optional<int> max_edges;
  unsigned threads = 0;

  auto* c_compose = app.add_subcommand("compose", "Partial composition of two graph files");
  c_compose->add_option("--operad", op_name, "mg|g|gc|mgc|t|gpointed|mgor|plie")->required();
  c_compose->add_option("--left", left, "Left operand JSON file")->required();
  c_compose->add_option("--star", star, "Vertex of the left operand to substitute")->required();
  c_compose->add_option("--right", right, "Right operand JSON file")->required();

  auto* c_verify = app.add_subcommand("verify", "Run a named verification suite");
  c_verify->add_option("--suite", suite,
                       "axioms|nonfree|prelie|lemmfond|koszul|hilbert|lp|threshold|all");

  auto* c_closure = app.add_subcommand("closure", "Dimensions of a generated suboperad");
  c_closure->add_option("--operad", op_name)->default_val("mg");
  c_closure->add_option("--gens", gens, "Generator file")->required();
  c_closure->add_option("--max-edges", max_edges, "Edge cap per basis vector");
  c_closure->add_option("--threads", threads, "Worker threads (0 = auto)");

  auto* c_membership = app.add_subcommand("membership", "Span membership of a target vector");
  c_membership->add_option("--operad", op_name)->default_val("mg");
  c_membership->add_option("--gens", gens, "Generator file")->required();
  c_membership->add_option("--target", target, "Target vector JSON file")->required();
  c_membership->add_option("--max-edges", max_edges, "Edge cap per basis vector");
  c_membership->add_option("--threads", threads, "Worker threads (0 = auto)");

  auto* c_generators = app.add_subcommand("generators", "Generator report at an arity");
  c_generators->add_option("--operad", op_name, "g|t")->required();
  c_generators->add_option("--arity", arity)->required();

  auto* c_pairing = app.add_subcommand("pairing", "Grafting pairing matrix of two relation files");
  c_pairing->add_option("--left", left, "Dual-side relation file")->required();
  c_pairing->add_option("--right", right, "Primal-side relation file")->required();

  auto* c_hilbert = app.add_subcommand("hilbert", "Dimension sequence of a built-in series");
  c_hilbert->add_option("--series", series, "sp|sp-dual|commag");
  c_hilbert->add_option("--order", order, "Truncation order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_compose->parsed()) return cmd_compose(opts, op_name, left, star, right);
    if (c_verify->parsed()) return cmd_verify(opts, suite);
    if (c_closure->parsed()) return cmd_closure(opts, op_name, gens, max_edges, threads);
    if (c_membership->parsed())
      return cmd_membership(opts, op_name, gens, target, max_edges, threads);
    if (c_generators->parsed()) return cmd_generators(opts, op_name, arity);
    if (c_pairing->parsed()) return cmd_pairing(opts, left, right);
    if (c_hilbert->parsed()) return cmd_hilbert(opts, series, order);
  } catch (const oforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.cls());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
