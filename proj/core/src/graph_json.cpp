#include "oforge/graph_json.hpp"

#include <fstream>

#include "oforge/error.hpp"

namespace oforge {

using nlohmann::json;

json graph_to_json(const Mhg& g) {
  json j;
  j["vertices"] = g.vertices();
  if (g.oriented()) j["oriented"] = true;
  if (g.root()) j["root"] = *g.root();
  json edges = json::array();
  for (const auto& [e, m] : g.edges()) {
    if (g.oriented()) {
      json ends = json::array();
      for (const auto& [end, k] : e.ends)
        for (int i = 0; i < k; ++i)
          ends.push_back(json::array({end.v, std::string(1, end_sym_char(end.sym))}));
      edges.push_back(json{{"ends", ends}, {"mult", m}});
    } else {
      json mono = json::array();
      for (const auto& [end, k] : e.ends) mono.push_back(json::array({end.v, k}));
      for (int i = 0; i < m; ++i) edges.push_back(mono);
    }
  }
  j["edges"] = edges;
  return j;
}

namespace {

EndSym parse_sym(const json& s) {
  if (!s.is_string()) fail_parse("end symbol must be a string");
  std::string v = s.get<std::string>();
  if (v == "_") return EndSym::plain;
  if (v == ">") return EndSym::arrow;
  fail_parse("unknown end symbol '" + v + "'");
}

Edge parse_plain_edge(const json& mono) {
  std::vector<End> units;
  for (const auto& pair : mono) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_integer())
      fail_parse("plain edge entries must be [label, exponent] pairs");
    int k = pair[1].get<int>();
    if (k <= 0) fail_parse("edge exponent must be positive");
    for (int i = 0; i < k; ++i) units.push_back(End{pair[0].get<std::string>(), EndSym::plain});
  }
  if (units.empty()) fail_parse("empty edge");
  return make_edge(std::move(units));
}

std::pair<Edge, int> parse_oriented_edge(const json& entry) {
  if (!entry.contains("ends") || !entry["ends"].is_array()) fail_parse("oriented edge needs 'ends'");
  std::vector<End> units;
  for (const auto& pair : entry["ends"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
      fail_parse("oriented edge ends must be [label, symbol] pairs");
    units.push_back(End{pair[0].get<std::string>(), parse_sym(pair[1])});
  }
  if (units.empty()) fail_parse("empty edge");
  int mult = 1;
  if (entry.contains("mult")) {
    if (!entry["mult"].is_number_integer() || entry["mult"].get<int>() <= 0)
      fail_parse("edge 'mult' must be a positive integer");
    mult = entry["mult"].get<int>();
  }
  return {make_edge(std::move(units)), mult};
}

}  // namespace

Mhg graph_from_json(const json& j) {
  if (!j.is_object()) fail_parse("graph must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail_parse("graph needs 'vertices'");
  std::vector<Label> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail_parse("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }

  bool oriented = j.value("oriented", false);
  std::optional<Label> root;
  if (j.contains("root")) {
    if (!j["root"].is_string()) fail_parse("'root' must be a string");
    root = j["root"].get<std::string>();
  }

  std::vector<std::pair<Edge, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail_parse("'edges' must be an array");
    for (const auto& entry : j["edges"]) {
      if (entry.is_array()) {
        edges.emplace_back(parse_plain_edge(entry), 1);
      } else if (entry.is_object()) {
        oriented = true;
        edges.push_back(parse_oriented_edge(entry));
      } else {
        fail_parse("edge entries must be arrays or objects");
      }
    }
  }
  try {
    return Mhg::make(std::move(vertices), std::move(edges), oriented, std::move(root));
  } catch (const Error& e) {
    if (e.cls() == ErrorClass::input) fail_parse(e.what());
    throw;
  }
}

json comb_to_json(const GraphComb& w) {
  json terms = json::array();
  for (const auto& [g, c] : w.terms())
    terms.push_back(json{{"coeff", to_string(c)}, {"graph", graph_to_json(g)}});
  return json{{"terms", terms}};
}

GraphComb comb_from_json(const json& j) {
  GraphComb w;
  if (j.is_object() && j.contains("terms")) {
    if (!j["terms"].is_array()) fail_parse("'terms' must be an array");
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("graph")) fail_parse("term needs a 'graph'");
      Rational c(1);
      if (t.contains("coeff")) {
        if (t["coeff"].is_string())
          c = parse_rational(t["coeff"].get<std::string>());
        else if (t["coeff"].is_number_integer())
          c = Rational(t["coeff"].get<long long>());
        else
          fail_parse("'coeff' must be a string or integer");
      }
      w.add_term(graph_from_json(t["graph"]), c);
    }
    return w;
  }
  w.add_term(graph_from_json(j), Rational(1));
  return w;
}

std::string to_json_string(const json& j) { return j.dump(); }

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_parse("malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail_input("cannot write file: " + path);
  out << j.dump() << "\n";
}

}  // namespace oforge
