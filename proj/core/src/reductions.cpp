#include "sndp/reductions.hpp"

#include "sndp/errors.hpp"

#include <algorithm>
#include <string>

namespace sndp {

const char* reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::ElemToHyper: return "elem_to_hyper";
    case ReductionKind::HyperToGraphCover: return "hyper_to_graph_cover";
    case ReductionKind::HyperToNwElem: return "hyper_to_nw_elem";
    case ReductionKind::NwElemToEwElem: return "nw_elem_to_ew_elem";
  }
  return "?";
}

nlohmann::json ReductionMap::to_json() const {
  nlohmann::json j;
  j["transform"] = reduction_name(kind);
  if (!terminal_map.empty()) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [from, to] : terminal_map) t[std::to_string(from)] = to;
    j["terminal_map"] = t;
  }
  if (!dummies.empty()) {
    nlohmann::json d = nlohmann::json::array();
    for (const Dummy& dummy : dummies)
      d.push_back({{"id", dummy.id}, {"non_terminal", dummy.non_terminal}, {"edge", dummy.edge}});
    j["dummies"] = d;
  }
  if (!edge_map.empty()) {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [from, to] : edge_map) e[std::to_string(from)] = to;
    j["edge_map"] = e;
  }
  if (!hyperedge_for_nonterminal.empty()) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [v, id] : hyperedge_for_nonterminal) h[std::to_string(v)] = id;
    j["hyperedge_for_nonterminal"] = h;
  }
  if (!preincluded.empty()) j["preincluded"] = preincluded;
  if (!node_for_hyperedge.empty()) {
    nlohmann::json z = nlohmann::json::object();
    for (const auto& [e, v] : node_for_hyperedge) z[std::to_string(e)] = v;
    j["node_for_hyperedge"] = z;
  }
  if (!halved_weights.empty()) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [v, half] : halved_weights) w[std::to_string(v)] = rational_to_json(half);
    j["halved_weights"] = w;
  }
  if (!dropped_useless_nodes.empty()) j["dropped_useless_nodes"] = dropped_useless_nodes;
  return j;
}

ElemToHyperResult elem_to_hyper(const ElemInstance& inst) {
  validate(inst);

  ElemToHyperResult out;
  out.map.kind = ReductionKind::ElemToHyper;

  int next_id = 0;
  for (int t : inst.terminals) out.map.terminal_map[t] = next_id++;

  // One dummy per (non-terminal, incident edge), in lexicographic order.
  std::map<std::pair<int, int>, int> dummy_for;
  for (int v = 0; v < inst.graph.n; ++v) {
    if (inst.is_terminal(v)) continue;
    for (int id = 0; id < inst.graph.edge_count(); ++id) {
      const Edge& e = inst.graph.edges[id];
      if (e.u != v && e.v != v) continue;
      dummy_for[{v, id}] = next_id;
      out.map.dummies.push_back({next_id, v, id});
      ++next_id;
    }
  }

  Hypergraph h;
  h.n = next_id;

  // Original edges keep their cost and their ids.
  for (int id = 0; id < inst.graph.edge_count(); ++id) {
    const Edge& e = inst.graph.edges[id];
    auto endpoint = [&](int vertex) {
      return inst.is_terminal(vertex) ? out.map.terminal_map.at(vertex)
                                      : dummy_for.at({vertex, id});
    };
    Hyperedge he;
    he.vertices = {endpoint(e.u), endpoint(e.v)};
    std::sort(he.vertices.begin(), he.vertices.end());
    he.cost = e.cost;
    h.hyperedges.push_back(std::move(he));
    out.map.edge_map[id] = id;
  }

  // One hyperedge over the dummies of each non-terminal, at the node
  // weight (zero if unweighted). Non-terminals of degree <= 1 cannot
  // carry a path and produce no hyperedge.
  for (int v = 0; v < inst.graph.n; ++v) {
    if (inst.is_terminal(v)) continue;
    std::vector<int> members;
    for (const auto& [key, dummy] : dummy_for)
      if (key.first == v) members.push_back(dummy);
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    Hyperedge he;
    he.vertices = std::move(members);
    he.cost = inst.node_weights.count(v) ? inst.node_weights.at(v) : Rational(0);
    out.map.hyperedge_for_nonterminal[v] = h.edge_count();
    h.hyperedges.push_back(std::move(he));
  }

  out.instance.hyper = std::move(h);
  for (const auto& [pair, r] : inst.requirements.pairs())
    out.instance.requirements.set(out.map.terminal_map.at(pair.first),
                                  out.map.terminal_map.at(pair.second), r);
  validate(out.instance);
  return out;
}

HyperToGraphCoverResult hyper_to_graph_cover(const HyperInstance& inst) {
  validate(inst);

  HyperToGraphCoverResult out;
  out.map.kind = ReductionKind::HyperToGraphCover;
  out.graph.n = inst.hyper.n;

  std::vector<int> large;
  for (int id = 0; id < inst.hyper.edge_count(); ++id) {
    const Hyperedge& e = inst.hyper.hyperedges[id];
    if (e.size() == 2) {
      out.map.edge_map[out.graph.edge_count()] = id;
      out.graph.edges.push_back({e.vertices[0], e.vertices[1], e.cost});
    } else {
      if (e.cost > 0)
        throw ValidationError("costed hyperedge of size > 2 at hyperedges[" +
                              std::to_string(id) + "]: use the halving reduction");
      large.push_back(id);
    }
  }
  out.map.preincluded = large;
  out.requirement =
      RequirementFn::pairwise_max(inst.hyper.n, inst.requirements).residual(inst.hyper, large);
  return out;
}

HyperToNwElemResult hyper_to_nw_elem(const HyperInstance& inst) {
  validate(inst);

  HyperToNwElemResult out;
  out.map.kind = ReductionKind::HyperToNwElem;

  ElemInstance& elem = out.instance;
  elem.graph.n = inst.hyper.n + inst.hyper.edge_count();
  for (int a = 0; a < inst.hyper.n; ++a) elem.terminals.insert(a);
  for (int id = 0; id < inst.hyper.edge_count(); ++id) {
    int z = inst.hyper.n + id;
    out.map.node_for_hyperedge[id] = z;
    for (int a : inst.hyper.hyperedges[id].vertices)
      elem.graph.edges.push_back({a, z, Rational(0)});
    elem.node_weights[z] = inst.hyper.hyperedges[id].cost;
  }
  elem.requirements = inst.requirements;
  validate(elem);
  return out;
}

NwToEwResult nw_elem_to_ew_elem(const ElemInstance& inst) {
  validate(inst);

  NwToEwResult out;
  out.instance = inst;
  out.map.kind = ReductionKind::NwElemToEwElem;
  out.loss_factor = Rational(1);

  for (const auto& [v, weight] : inst.node_weights) {
    int degree = inst.graph.degree(v);
    if (degree <= 1) {
      // A weighted non-terminal with fewer than two incident edges can
      // never lie on a path; its weight is unusable and is dropped.
      out.map.dropped_useless_nodes.push_back(v);
      continue;
    }
    Rational half = weight / 2;
    out.map.halved_weights[v] = half;
    for (Edge& e : out.instance.graph.edges)
      if (e.u == v || e.v == v) e.cost += half;
    Rational node_loss = Rational(degree) / 2;
    out.loss_factor = std::max(out.loss_factor, node_loss);
  }
  out.instance.node_weights.clear();
  return out;
}

std::vector<int> prune_degree_one_uses(const ElemInstance& weighted_inst,
                                       std::vector<int> solution_edges) {
  std::sort(solution_edges.begin(), solution_edges.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [v, weight] : weighted_inst.node_weights) {
      int count = 0, lone = -1;
      for (int id : solution_edges) {
        const Edge& e = weighted_inst.graph.edges.at(id);
        if (e.u == v || e.v == v) {
          ++count;
          lone = id;
        }
      }
      if (count == 1) {
        std::erase(solution_edges, lone);
        changed = true;
      }
    }
  }
  return solution_edges;
}

Rational zhao_bound(int dplus_value, int rmax) {
  if (dplus_value < 1 || rmax < 1)
    throw ValidationError("zhao_bound requires dplus >= 1 and rmax >= 1");
  Rational harmonic(0);
  for (int k = 1; k <= rmax; ++k) harmonic += make_rational(1, k);
  return Rational(dplus_value) * harmonic;
}

}  // namespace sndp
