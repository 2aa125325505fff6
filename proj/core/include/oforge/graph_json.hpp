#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "oforge/graph.hpp"

namespace oforge {

// Wire format.
//
// Plain graphs list each edge as an array of [label, exponent] pairs, with
// parallel edges repeated:
//   {"vertices": ["a","b"], "edges": [[["a",1],["b",1]]]}
// Oriented graphs list edge ends with their symbols ("_" or ">"):
//   {"oriented": true, "vertices": ["a","b"],
//    "edges": [{"ends": [["a","_"],["b",">"]], "mult": 1}]}
// Pointed graphs carry an optional "root". Serialisation is canonical
// (sorted vertices and edges), so serialise(parse(s)) == s for canonical s.
nlohmann::json graph_to_json(const Mhg& g);
Mhg graph_from_json(const nlohmann::json& j);

nlohmann::json comb_to_json(const GraphComb& w);
GraphComb comb_from_json(const nlohmann::json& j);  // accepts a bare graph too

std::string to_json_string(const nlohmann::json& j);
nlohmann::json parse_json(const std::string& text);
nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace oforge
