#pragma once

#include "sndp/instance.hpp"
#include "sndp/rational.hpp"
#include "sndp/sets.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sndp {

// Directed network with exact rational capacities. Optional node
// capacities are realized internally by node splitting; the split
// preserves the s-t flow value exactly.
struct CapacitatedNetwork {
  struct Arc {
    int tail = 0;
    int head = 0;
    Rational capacity;
  };

  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
  std::map<int, Rational> node_capacities;

  // Both directions with the same capacity (an undirected edge).
  void add_undirected(int a, int b, const Rational& capacity);
};

// Source side of a minimum cut. `value` equals the total capacity
// leaving `side` and, by strong duality, the returned max-flow value;
// the equality is asserted on every call. With node capacities the side
// is reported over the original nodes (a node is inside iff its entry
// copy is) and the value is the cut value of the split network.
struct CutCertificate {
  VertexSet side = 0;
  Rational value;
};

struct MaxFlowResult {
  Rational value;
  CutCertificate cut;
};

// BFS augmenting paths over exact rationals (shortest augmenting path,
// so termination does not depend on capacity magnitudes).
MaxFlowResult max_flow_min_cut(const CapacitatedNetwork& net);

// Max number of u-v paths in (V, F) that are pairwise disjoint in edges
// and non-terminals; paths may share terminals. F holds edge ids of
// inst.graph.
int element_connectivity(const ElemInstance& inst, const std::vector<int>& edge_subset,
                         int u, int v);

// Min over u-v separating S of |delta_F(S)|, computed as element
// connectivity in the bipartite representation (one capacity-1
// non-terminal per hyperedge). F holds hyperedge ids of h.
int hyperedge_connectivity(const Hypergraph& h, const std::vector<int>& hyperedge_subset,
                           int u, int v);

// Edge connectivity of (V, F) between u and v (unit capacities).
int edge_connectivity(const Graph& g, const std::vector<int>& edge_subset, int u, int v);

struct ViolatedCut {
  VertexSet side;       // S with x(delta(S)) + |delta_fixed(S)| < r(u, v)
  Rational deficit;     // r(u, v) minus that value, > 0
  int u = 0;            // the pair whose cut requirement failed
  int v = 0;
};

// A capacitated crossing element: pays `capacity` on every cut it
// crosses. Edges, hyperedges and fixed structures all reduce to this.
struct WeightedElement {
  VertexSet mask = 0;
  Rational capacity;
};

// Exact min over u-v separating S of the total capacity of crossing
// elements; optionally reports a minimizing side (re-evaluated directly
// before returning).
Rational min_cut_elements(int n, const std::vector<WeightedElement>& elements, int u, int v,
                          VertexSet* side = nullptr);

// Separation worker behind find_violated_cut: scans requirement pairs in
// lexicographic order, returns the first violated cut.
std::optional<ViolatedCut> find_violated_cut_elements(
    int n, const std::vector<WeightedElement>& elements, const PairRequirements& reqs);

// Separation oracle for the covering LP over `ground`: capacities are
// x_e plus 1 for fixed edges. Pairs are scanned in lexicographic order
// and the first violated cut is returned, so a whole cutting-plane run
// is deterministic. Returns nullopt iff no cut of any pair is violated;
// the reported deficit is re-evaluated directly on S before returning.
std::optional<ViolatedCut> find_violated_cut(const Hypergraph& ground,
                                             const std::map<int, Rational>& x,
                                             const std::set<int>& fixed,
                                             const PairRequirements& reqs);

}  // namespace sndp
