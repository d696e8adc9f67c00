#include "sndp/io.hpp"

#include "sndp/errors.hpp"

#include <fstream>
#include <sstream>

namespace sndp {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError("missing field " + path + "." + key);
  return *it;
}

int int_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer())
    throw ValidationError("expected integer at " + path + "." + key);
  return v.get<int>();
}

Graph parse_graph(const json& j) {
  Graph g;
  g.n = int_field(j, "n", "$");
  const json& edges = field(j, "edges", "$");
  if (!edges.is_array()) throw ValidationError("expected array at edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) throw ValidationError("expected object at " + at);
    Edge edge;
    edge.u = int_field(e, "u", at);
    edge.v = int_field(e, "v", at);
    edge.cost = rational_from_json(field(e, "cost", at), at + ".cost");
    if (edge.cost < 0) throw ValidationError("negative cost at " + at + ".cost");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

PairRequirements parse_requirements(const json& j, const std::string& path) {
  PairRequirements reqs;
  if (!j.is_array()) throw ValidationError("expected array at " + path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& entry = j[i];
    if (!entry.is_object()) throw ValidationError("expected object at " + at);
    int u = int_field(entry, "u", at);
    int v = int_field(entry, "v", at);
    int r = int_field(entry, "r", at);
    if (r < 0) throw ValidationError("negative requirement at " + at + ".r");
    if (u == v) throw ValidationError("requirement on a single vertex at " + at);
    if (reqs.get(u, v) != 0) throw ValidationError("duplicate requirement pair at " + at);
    reqs.set(u, v, r);
  }
  return reqs;
}

json requirements_to_json(const PairRequirements& reqs) {
  json out = json::array();
  for (const auto& [pair, r] : reqs.pairs())
    out.push_back({{"u", pair.first}, {"v", pair.second}, {"r", r}});
  return out;
}

json graph_edges_to_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges)
    out.push_back({{"u", e.u}, {"v", e.v}, {"cost", rational_to_json(e.cost)}});
  return out;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  const json& kind = field(j, "kind", "$");
  if (!kind.is_string()) throw ValidationError("expected string at kind");
  const std::string k = kind.get<std::string>();

  Instance out;
  if (k == "ec") {
    EcInstance inst;
    inst.graph = parse_graph(j);
    inst.requirements = parse_requirements(field(j, "requirements", "$"), "requirements");
    out = std::move(inst);
  } else if (k == "elem") {
    ElemInstance inst;
    inst.graph = parse_graph(j);
    const json& terminals = field(j, "terminals", "$");
    if (!terminals.is_array()) throw ValidationError("expected array at terminals");
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      if (!terminals[i].is_number_integer())
        throw ValidationError("expected integer at terminals[" + std::to_string(i) + "]");
      inst.terminals.insert(terminals[i].get<int>());
    }
    inst.requirements = parse_requirements(field(j, "requirements", "$"), "requirements");
    if (j.contains("node_weights")) {
      const json& weights = j["node_weights"];
      if (!weights.is_object()) throw ValidationError("expected object at node_weights");
      for (auto it = weights.begin(); it != weights.end(); ++it) {
        int v;
        try {
          v = std::stoi(it.key());
        } catch (const std::exception&) {
          throw ValidationError("non-numeric vertex key at node_weights." + it.key());
        }
        inst.node_weights[v] =
            rational_from_json(it.value(), "node_weights[" + it.key() + "]");
      }
    }
    out = std::move(inst);
  } else if (k == "hyper") {
    HyperInstance inst;
    inst.hyper.n = int_field(j, "n", "$");
    const json& hyperedges = field(j, "hyperedges", "$");
    if (!hyperedges.is_array()) throw ValidationError("expected array at hyperedges");
    for (std::size_t i = 0; i < hyperedges.size(); ++i) {
      const std::string at = "hyperedges[" + std::to_string(i) + "]";
      const json& e = hyperedges[i];
      Hyperedge he;
      const json& vertices = field(e, "vertices", at);
      if (!vertices.is_array()) throw ValidationError("expected array at " + at + ".vertices");
      for (const json& v : vertices) {
        if (!v.is_number_integer())
          throw ValidationError("expected integer at " + at + ".vertices");
        he.vertices.push_back(v.get<int>());
      }
      std::sort(he.vertices.begin(), he.vertices.end());
      he.cost = rational_from_json(field(e, "cost", at), at + ".cost");
      if (he.cost < 0) throw ValidationError("negative cost at " + at + ".cost");
      inst.hyper.hyperedges.push_back(std::move(he));
    }
    inst.requirements = parse_requirements(field(j, "requirements", "$"), "requirements");
    out = std::move(inst);
  } else {
    throw ValidationError("unknown kind \"" + k + "\"");
  }

  validate(out);
  return out;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

json instance_to_json(const Instance& instance) {
  json j;
  switch (kind_of(instance)) {
    case InstanceKind::Ec: {
      const auto& inst = std::get<EcInstance>(instance);
      j["kind"] = "ec";
      j["n"] = inst.graph.n;
      j["edges"] = graph_edges_to_json(inst.graph);
      j["requirements"] = requirements_to_json(inst.requirements);
      break;
    }
    case InstanceKind::Elem: {
      const auto& inst = std::get<ElemInstance>(instance);
      j["kind"] = "elem";
      j["n"] = inst.graph.n;
      j["edges"] = graph_edges_to_json(inst.graph);
      j["terminals"] = json(std::vector<int>(inst.terminals.begin(), inst.terminals.end()));
      if (!inst.node_weights.empty()) {
        json weights = json::object();
        for (const auto& [v, w] : inst.node_weights)
          weights[std::to_string(v)] = rational_to_json(w);
        j["node_weights"] = weights;
      }
      j["requirements"] = requirements_to_json(inst.requirements);
      break;
    }
    case InstanceKind::Hyper: {
      const auto& inst = std::get<HyperInstance>(instance);
      j["kind"] = "hyper";
      j["n"] = inst.hyper.n;
      json hyperedges = json::array();
      for (const Hyperedge& e : inst.hyper.hyperedges)
        hyperedges.push_back({{"vertices", e.vertices}, {"cost", rational_to_json(e.cost)}});
      j["hyperedges"] = hyperedges;
      j["requirements"] = requirements_to_json(inst.requirements);
      break;
    }
  }
  return j;
}

std::string serialize_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file " + path);
  out << content;
}

}  // namespace sndp
