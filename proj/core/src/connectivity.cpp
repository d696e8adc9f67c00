#include "sndp/connectivity.hpp"

#include "sndp/errors.hpp"

#include <cassert>
#include <queue>
#include <string>

namespace sndp {

void CapacitatedNetwork::add_undirected(int a, int b, const Rational& capacity) {
  arcs.push_back({a, b, capacity});
  arcs.push_back({b, a, capacity});
}

namespace {

// Residual representation: arcs stored in (forward, reverse) pairs so the
// partner of arc i is i ^ 1.
struct FlowGraph {
  int n = 0;
  std::vector<int> head;
  std::vector<Rational> residual;
  std::vector<std::vector<int>> out;

  explicit FlowGraph(int nodes) : n(nodes), out(nodes) {}

  void add_arc(int from, int to, const Rational& cap) {
    out[from].push_back(static_cast<int>(head.size()));
    head.push_back(to);
    residual.push_back(cap);
    out[to].push_back(static_cast<int>(head.size()));
    head.push_back(from);
    residual.push_back(Rational(0));
  }
};

// Shortest augmenting path; the iteration bound depends only on the
// graph, never on capacity magnitudes, so exact rationals are safe.
Rational run_max_flow(FlowGraph& g, int source, int sink) {
  Rational total(0);
  std::vector<int> parent_arc(g.n);
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[source] = -2;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty() && parent_arc[sink] == -1) {
      int u = queue.front();
      queue.pop();
      for (int a : g.out[u]) {
        int v = g.head[a];
        if (parent_arc[v] == -1 && g.residual[a] > 0) {
          parent_arc[v] = a;
          queue.push(v);
        }
      }
    }
    if (parent_arc[sink] == -1) break;

    Rational bottleneck(-1);
    for (int v = sink; v != source;) {
      int a = parent_arc[v];
      if (bottleneck < 0 || g.residual[a] < bottleneck) bottleneck = g.residual[a];
      v = g.head[a ^ 1];
    }
    for (int v = sink; v != source;) {
      int a = parent_arc[v];
      g.residual[a] -= bottleneck;
      g.residual[a ^ 1] += bottleneck;
      v = g.head[a ^ 1];
    }
    total += bottleneck;
  }
  return total;
}

std::vector<char> residual_reachable(const FlowGraph& g, int source) {
  std::vector<char> seen(g.n, 0);
  seen[source] = 1;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int a : g.out[u]) {
      int v = g.head[a];
      if (!seen[v] && g.residual[a] > 0) {
        seen[v] = 1;
        queue.push(v);
      }
    }
  }
  return seen;
}

}  // namespace

MaxFlowResult max_flow_min_cut(const CapacitatedNetwork& net) {
  if (net.source == net.sink) throw ValidationError("max flow with source == sink");
  for (const auto& arc : net.arcs)
    if (arc.capacity < 0) throw ValidationError("negative capacity arc");

  // Node splitting: a capacitated node v becomes entry v and exit
  // n + index(v), joined by an arc of the node capacity.
  const int base = net.node_count;
  std::map<int, int> exit_of;
  for (const auto& [v, cap] : net.node_capacities) {
    if (cap < 0) throw ValidationError("negative node capacity");
    exit_of.emplace(v, base + static_cast<int>(exit_of.size()));
  }
  auto entry = [](int v) { return v; };
  auto exit = [&](int v) {
    auto it = exit_of.find(v);
    return it == exit_of.end() ? v : it->second;
  };

  FlowGraph g(base + static_cast<int>(exit_of.size()));
  std::vector<Rational> original_caps;
  for (const auto& arc : net.arcs) g.add_arc(exit(arc.tail), entry(arc.head), arc.capacity);
  for (const auto& [v, cap] : net.node_capacities) g.add_arc(entry(v), exit(v), cap);

  FlowGraph flowed = g;
  Rational value = run_max_flow(flowed, exit(net.source), entry(net.sink));

  std::vector<char> reachable = residual_reachable(flowed, exit(net.source));

  // Capacity of the forward arcs leaving the reachable side; by strong
  // duality this equals the flow value, asserted exactly.
  Rational cut_value(0);
  for (std::size_t i = 0; i < g.head.size(); i += 2) {
    int tail = g.head[i ^ 1];
    int head = g.head[i];
    if (reachable[tail] && !reachable[head]) cut_value += g.residual[i];
  }
  if (cut_value != value)
    throw std::logic_error("max-flow/min-cut duality violated: flow " +
                           rational_to_string(value) + " vs cut " +
                           rational_to_string(cut_value));

  CutCertificate cut;
  cut.value = cut_value;
  for (int v = 0; v < net.node_count && v < kMaxVertices; ++v)
    if (v == net.source || reachable[entry(v)]) cut.side = with_vertex(cut.side, v);
  return {value, cut};
}

namespace {

struct ElementCutResult {
  Rational value;
  VertexSet side = 0;  // over the ground vertices [0, n)
};

// Min cut between ground vertices u and v where each element (a vertex
// subset with a capacity) pays its capacity when it crosses. Realized as
// a flow on the bipartite representation: one capacity-limited node per
// element, joined to its members.
ElementCutResult min_cut_over_elements(int n, const std::vector<WeightedElement>& elements,
                                       int u, int v) {
  CapacitatedNetwork net;
  net.node_count = n + static_cast<int>(elements.size());
  net.source = u;
  net.sink = v;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    int z = n + static_cast<int>(i);
    net.node_capacities[z] = elements[i].capacity;
    for (int a : set_to_vector(elements[i].mask))
      net.add_undirected(a, z, elements[i].capacity);
  }
  MaxFlowResult flow = max_flow_min_cut(net);

  ElementCutResult result;
  result.value = flow.value;
  result.side = flow.cut.side & full_set(n);

  // Independent re-evaluation of the projected cut.
  Rational direct(0);
  for (const auto& element : elements)
    if (edge_crosses(element.mask, result.side, n)) direct += element.capacity;
  if (direct != result.value)
    throw std::logic_error("projected cut does not match flow value");
  return result;
}

}  // namespace

Rational min_cut_elements(int n, const std::vector<WeightedElement>& elements, int u, int v,
                          VertexSet* side) {
  ElementCutResult r = min_cut_over_elements(n, elements, u, v);
  if (side) *side = r.side;
  return r.value;
}

int element_connectivity(const ElemInstance& inst, const std::vector<int>& edge_subset,
                         int u, int v) {
  if (!inst.is_terminal(u) || !inst.is_terminal(v))
    throw ValidationError("element connectivity endpoints must be terminals");
  if (u == v) throw ValidationError("element connectivity of a vertex with itself");

  CapacitatedNetwork net;
  net.node_count = inst.graph.n;
  net.source = u;
  net.sink = v;
  const Rational one(1);
  for (int id : edge_subset) {
    const Edge& e = inst.graph.edges.at(id);
    net.add_undirected(e.u, e.v, one);
  }
  for (int w = 0; w < inst.graph.n; ++w)
    if (!inst.is_terminal(w)) net.node_capacities[w] = one;

  Rational value = max_flow_min_cut(net).value;
  assert(value.get_den() == 1);
  return static_cast<int>(value.get_num().get_si());
}

int hyperedge_connectivity(const Hypergraph& h, const std::vector<int>& hyperedge_subset,
                           int u, int v) {
  if (u == v) throw ValidationError("hyperedge connectivity of a vertex with itself");
  // Element connectivity in the bipartite representation, with each
  // hyperedge node a capacity-1 non-terminal.
  ElemInstance bip;
  bip.graph.n = h.n + static_cast<int>(hyperedge_subset.size());
  for (int a = 0; a < h.n; ++a) bip.terminals.insert(a);
  for (std::size_t i = 0; i < hyperedge_subset.size(); ++i) {
    int z = h.n + static_cast<int>(i);
    for (int a : h.hyperedges.at(hyperedge_subset[i]).vertices)
      bip.graph.edges.push_back({a, z, Rational(0)});
  }
  std::vector<int> all_edges(bip.graph.edges.size());
  for (std::size_t i = 0; i < all_edges.size(); ++i) all_edges[i] = static_cast<int>(i);
  return element_connectivity(bip, all_edges, u, v);
}

int edge_connectivity(const Graph& g, const std::vector<int>& edge_subset, int u, int v) {
  if (u == v) throw ValidationError("edge connectivity of a vertex with itself");
  CapacitatedNetwork net;
  net.node_count = g.n;
  net.source = u;
  net.sink = v;
  const Rational one(1);
  for (int id : edge_subset) {
    const Edge& e = g.edges.at(id);
    net.add_undirected(e.u, e.v, one);
  }
  Rational value = max_flow_min_cut(net).value;
  assert(value.get_den() == 1);
  return static_cast<int>(value.get_num().get_si());
}

std::optional<ViolatedCut> find_violated_cut_elements(int n,
                                                      const std::vector<WeightedElement>& elements,
                                                      const PairRequirements& reqs) {
  for (const auto& [pair, r] : reqs.pairs()) {
    if (r <= 0) continue;
    ElementCutResult cut = min_cut_over_elements(n, elements, pair.first, pair.second);
    if (cut.value < r) {
      ViolatedCut out;
      out.side = cut.side;
      out.deficit = Rational(r) - cut.value;
      out.u = pair.first;
      out.v = pair.second;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<ViolatedCut> find_violated_cut(const Hypergraph& ground,
                                             const std::map<int, Rational>& x,
                                             const std::set<int>& fixed,
                                             const PairRequirements& reqs) {
  std::vector<WeightedElement> elements;
  for (int e = 0; e < ground.edge_count(); ++e) {
    Rational cap(0);
    if (auto it = x.find(e); it != x.end()) cap += it->second;
    if (fixed.count(e)) cap += 1;
    if (cap > 0) elements.push_back({ground.hyperedges[e].mask(), cap});
  }
  // Zero-capacity ground edges are omitted: they contribute nothing to
  // any cut.
  return find_violated_cut_elements(ground.n, elements, reqs);
}

}  // namespace sndp
