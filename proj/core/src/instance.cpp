#include "sndp/instance.hpp"

#include "sndp/errors.hpp"

#include <algorithm>
#include <string>

namespace sndp {

int Graph::degree(int vertex) const {
  int d = 0;
  for (const Edge& e : edges) d += (e.u == vertex) + (e.v == vertex);
  return d;
}

Hypergraph as_hypergraph(const Graph& graph) {
  Hypergraph h;
  h.n = graph.n;
  h.hyperedges.reserve(graph.edges.size());
  for (const Edge& e : graph.edges) {
    Hyperedge he;
    he.vertices = {std::min(e.u, e.v), std::max(e.u, e.v)};
    he.cost = e.cost;
    h.hyperedges.push_back(std::move(he));
  }
  return h;
}

int dplus(const Hypergraph& h) {
  int best = 0;
  for (const Hyperedge& e : h.hyperedges)
    if (e.cost > 0) best = std::max(best, e.size());
  return best;
}

std::vector<int> delta_ids(const Hypergraph& h, VertexSet s) {
  std::vector<int> ids;
  for (int i = 0; i < h.edge_count(); ++i)
    if (edge_crosses(h.hyperedges[i].mask(), s, h.n)) ids.push_back(i);
  return ids;
}

void PairRequirements::set(int u, int v, int r) {
  if (u == v) throw ValidationError("requirement on a single vertex " + std::to_string(u));
  if (r < 0) throw ValidationError("negative requirement");
  auto key = std::minmax(u, v);
  if (r == 0)
    table_.erase({key.first, key.second});
  else
    table_[{key.first, key.second}] = r;
}

int PairRequirements::get(int u, int v) const {
  auto key = std::minmax(u, v);
  auto it = table_.find({key.first, key.second});
  return it == table_.end() ? 0 : it->second;
}

int PairRequirements::rmax() const {
  int best = 0;
  for (const auto& [pair, r] : table_) best = std::max(best, r);
  return best;
}

namespace {

bool same_edges(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].u != b[i].u || a[i].v != b[i].v || a[i].cost != b[i].cost) return false;
  return true;
}

bool same_hyperedges(const std::vector<Hyperedge>& a, const std::vector<Hyperedge>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].vertices != b[i].vertices || a[i].cost != b[i].cost) return false;
  return true;
}

}  // namespace

bool EcInstance::operator==(const EcInstance& o) const {
  return graph.n == o.graph.n && same_edges(graph.edges, o.graph.edges) &&
         requirements == o.requirements;
}

bool ElemInstance::operator==(const ElemInstance& o) const {
  return graph.n == o.graph.n && same_edges(graph.edges, o.graph.edges) &&
         terminals == o.terminals && requirements == o.requirements &&
         node_weights == o.node_weights;
}

bool HyperInstance::operator==(const HyperInstance& o) const {
  return hyper.n == o.hyper.n && same_hyperedges(hyper.hyperedges, o.hyper.hyperedges) &&
         requirements == o.requirements;
}

InstanceKind kind_of(const Instance& instance) {
  if (std::holds_alternative<EcInstance>(instance)) return InstanceKind::Ec;
  if (std::holds_alternative<ElemInstance>(instance)) return InstanceKind::Elem;
  return InstanceKind::Hyper;
}

const char* kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Ec: return "ec";
    case InstanceKind::Elem: return "elem";
    case InstanceKind::Hyper: return "hyper";
  }
  return "?";
}

namespace {

void check_vertex_count(int n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (n > kMaxVertices)
    throw ValidationError("n exceeds the supported maximum of " +
                          std::to_string(kMaxVertices) + " vertices");
}

void validate_edges(const Graph& g) {
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges[i];
    const std::string at = "edges[" + std::to_string(i) + "]";
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
      throw ValidationError("vertex id out of range at " + at);
    if (e.u == e.v) throw ValidationError("self-loop at " + at);
    if (e.cost < 0) throw ValidationError("negative cost at " + at + ".cost");
  }
}

void validate_requirements(const PairRequirements& reqs, int n) {
  for (const auto& [pair, r] : reqs.pairs()) {
    if (pair.first < 0 || pair.second >= n)
      throw ValidationError("requirement vertex out of range at requirements");
    if (r < 0) throw ValidationError("negative requirement at requirements");
  }
}

}  // namespace

void validate(const EcInstance& instance) {
  check_vertex_count(instance.graph.n);
  validate_edges(instance.graph);
  validate_requirements(instance.requirements, instance.graph.n);
}

void validate(const ElemInstance& instance) {
  check_vertex_count(instance.graph.n);
  validate_edges(instance.graph);
  validate_requirements(instance.requirements, instance.graph.n);
  for (int t : instance.terminals)
    if (t < 0 || t >= instance.graph.n)
      throw ValidationError("terminal out of range at terminals");
  for (const auto& [pair, r] : instance.requirements.pairs()) {
    if (!instance.is_terminal(pair.first) || !instance.is_terminal(pair.second))
      throw ValidationError("requirement on non-terminal at requirements(" +
                            std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
  }
  for (const auto& [v, w] : instance.node_weights) {
    const std::string at = "node_weights[" + std::to_string(v) + "]";
    if (v < 0 || v >= instance.graph.n) throw ValidationError("vertex out of range at " + at);
    if (instance.is_terminal(v)) throw ValidationError("weight on a terminal at " + at);
    if (w < 0) throw ValidationError("negative weight at " + at);
  }
}

void validate(const HyperInstance& instance) {
  check_vertex_count(instance.hyper.n);
  for (int i = 0; i < instance.hyper.edge_count(); ++i) {
    const Hyperedge& e = instance.hyper.hyperedges[i];
    const std::string at = "hyperedges[" + std::to_string(i) + "]";
    if (e.size() < 2) throw ValidationError("hyperedge of size < 2 at " + at);
    for (int v : e.vertices)
      if (v < 0 || v >= instance.hyper.n)
        throw ValidationError("vertex id out of range at " + at + ".vertices");
    if (!std::is_sorted(e.vertices.begin(), e.vertices.end()) ||
        std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
      throw ValidationError("hyperedge vertices must be distinct at " + at + ".vertices");
    if (e.cost < 0) throw ValidationError("negative cost at " + at + ".cost");
  }
  validate_requirements(instance.requirements, instance.hyper.n);
}

void validate(const Instance& instance) {
  std::visit([](const auto& inst) { validate(inst); }, instance);
}

}  // namespace sndp
