#pragma once

#include "sndp/instance.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace sndp {

// Instance files are JSON:
//   { "kind": "ec"|"elem"|"hyper", "n": int,
//     "edges": [{"u":int,"v":int,"cost":int|"p/q"}],            // ec, elem
//     "hyperedges": [{"vertices":[int,...],"cost":int|"p/q"}],  // hyper
//     "terminals": [int,...], "node_weights": {"<v>":int|"p/q"},// elem only
//     "requirements": [{"u":int,"v":int,"r":int}] }
// Rationals are carried as integers or "p/q" strings; no floating point
// appears anywhere in the pipeline.

Instance parse_instance(const std::string& text);
Instance instance_from_json(const nlohmann::json& j);

std::string serialize_instance(const Instance& instance);
nlohmann::json instance_to_json(const Instance& instance);

Instance load_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sndp
