#pragma once

#include "sndp/instance.hpp"
#include "sndp/rational.hpp"
#include "sndp/requirement.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace sndp {

enum class ReductionKind {
  ElemToHyper,
  HyperToGraphCover,
  HyperToNwElem,
  NwElemToEwElem,
};

const char* reduction_name(ReductionKind kind);

// Bookkeeping for one instance transformation: id mappings for pulling
// solutions back and the cost accounting of the transform. Dummy vertex
// ids are allocated in (non-terminal id, incident edge id) lexicographic
// order so maps are reproducible.
struct ReductionMap {
  ReductionKind kind = ReductionKind::ElemToHyper;

  // elem_to_hyper: original vertex -> new vertex for terminals; dummy
  // vertices carry their provenance.
  std::map<int, int> terminal_map;
  struct Dummy {
    int id = 0;            // vertex id in the transformed instance
    int non_terminal = 0;  // original non-terminal
    int edge = 0;          // original incident edge id
  };
  std::vector<Dummy> dummies;
  // costed-object mapping; injective. For elem_to_hyper original edge ->
  // hyperedge id (ids are preserved); for hyper_to_graph_cover graph
  // edge -> original hyperedge id.
  std::map<int, int> edge_map;
  // elem_to_hyper: non-terminal -> its zero/weight hyperedge id.
  std::map<int, int> hyperedge_for_nonterminal;

  // hyper_to_graph_cover: zero-cost hyperedges of size > 2, pre-included.
  std::vector<int> preincluded;

  // hyper_to_nw_elem: hyperedge id -> its non-terminal node.
  std::map<int, int> node_for_hyperedge;

  // nw_elem_to_ew_elem: per weighted non-terminal the half-cost moved to
  // each incident edge; nodes dropped as useless (degree <= 1).
  std::map<int, Rational> halved_weights;
  std::vector<int> dropped_useless_nodes;

  nlohmann::json to_json() const;
};

// Replaces each non-terminal of degree >= 2 by a zero-cost (or
// node-weight-cost) hyperedge over fresh dummy vertices, one per
// incident edge; original edges keep their cost and their ids.
// Unweighted instances come out with dplus = 2, node-weighted ones with
// dplus = max degree of a weighted non-terminal.
struct ElemToHyperResult {
  HyperInstance instance;
  ReductionMap map;
};
ElemToHyperResult elem_to_hyper(const ElemInstance& inst);

// Pre-includes the zero-cost hyperedges of size > 2 and reduces to
// covering the residual g = f - |delta_E'| by the graph of size-2
// hyperedges. Requires dplus <= 2 (costed large hyperedges must go
// through the halving route instead).
struct HyperToGraphCoverResult {
  Graph graph;
  RequirementFn requirement;  // residual, skew-supermodular
  ReductionMap map;
};
HyperToGraphCoverResult hyper_to_graph_cover(const HyperInstance& inst);

// Standard bipartite representation: one zero-cost edge per (hyperedge,
// member) incidence, hyperedge nodes are non-terminals weighted by the
// hyperedge cost. Element connectivity in the result equals hyperedge
// connectivity in the input for every pair and sub-collection.
struct HyperToNwElemResult {
  ElemInstance instance;
  ReductionMap map;
};
HyperToNwElemResult hyper_to_nw_elem(const HyperInstance& inst);

// Moves each non-terminal weight w onto its incident edges as w/2.
// Weighted non-terminals of degree <= 1 cannot help any solution; their
// weight is dropped and recorded. loss_factor = (max degree of a
// weighted non-terminal)/2, at least 1.
struct NwToEwResult {
  ElemInstance instance;
  ReductionMap map;
  Rational loss_factor;
};
NwToEwResult nw_elem_to_ew_elem(const ElemInstance& inst);

// Removes selected edges that meet a weighted non-terminal that has only
// one selected incident edge (they carry halved cost but no
// connectivity); iterates to a fixpoint.
std::vector<int> prune_degree_one_uses(const ElemInstance& weighted_inst,
                                       std::vector<int> solution_edges);

// dplus * H_rmax, the guarantee of the primal-dual augmentation scheme,
// kept as an exact comparator.
Rational zhao_bound(int dplus_value, int rmax);

}  // namespace sndp
