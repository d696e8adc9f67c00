#include "sndp/rounding.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"
#include "sndp/io.hpp"
#include "sndp/reductions.hpp"

#include <algorithm>
#include <string>

namespace sndp {

namespace {

nlohmann::json dump_state(const std::string& label, const Graph& graph,
                          const std::set<int>& fixed, const std::set<int>& dropped,
                          const VertexSolution& sol) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"cost", rational_to_json(e.cost)}});
  nlohmann::json x = nlohmann::json::object();
  for (const auto& [id, value] : sol.x) x[std::to_string(id)] = rational_to_string(value);
  nlohmann::json cert = nlohmann::json::array();
  for (const BasisEntry& entry : sol.basis_certificate) {
    const char* kind = entry.kind == BasisEntry::Kind::Row ? "row"
                       : entry.kind == BasisEntry::Kind::LowerBound ? "lower" : "upper";
    cert.push_back({{"kind", kind}, {"index", entry.index}});
  }
  return nlohmann::json{{"label", label},
                        {"n", graph.n},
                        {"edges", edges},
                        {"fixed", std::vector<int>(fixed.begin(), fixed.end())},
                        {"dropped", std::vector<int>(dropped.begin(), dropped.end())},
                        {"x", x},
                        {"basis_certificate", cert}};
}

}  // namespace

JainResult jain_round(const Graph& graph, const RequirementFn& f, const JainOptions& options) {
  if (graph.n <= 8) {
    if (auto cex = check_skew_supermodular(f))
      throw ValidationError("requirement function is not skew-supermodular");
  }

  const Hypergraph ground = as_hypergraph(graph);
  const Rational half = make_rational(1, 2);

  std::set<int> fixed, dropped;
  std::vector<VertexSet> warm_tags;
  std::set<VertexSet> seen_tags;

  JainResult result;
  result.trace.initial_lp_value = 0;
  result.trace.total_cost = 0;

  while (true) {
    std::vector<int> fixed_list(fixed.begin(), fixed.end());
    RequirementFn residual = f.residual(ground, fixed_list);
    if (residual.is_trivial()) break;

    CoveringProblem problem;
    problem.ground = ground;
    for (int id = 0; id < graph.edge_count(); ++id)
      if (!fixed.count(id) && !dropped.count(id)) {
        problem.variable_ids.push_back(id);
        problem.costs[id] = graph.edges[id].cost;
      }
    if (problem.variable_ids.empty())
      throw InfeasibleError("residual requirement is nontrivial but no edges remain");
    problem.requirement = residual;

    CuttingPlaneResult cp = cutting_plane_solve(problem, warm_tags);
    for (const CoveringRow& row : cp.lp.rows())
      if (seen_tags.insert(row.tag).second) warm_tags.push_back(row.tag);

    const VertexSolution& sol = cp.solution;
    if (result.trace.iterations.empty()) result.trace.initial_lp_value = sol.objective_value;

    IterationRecord record;
    record.lp_value = sol.objective_value;
    record.vertex = sol;
    record.max_coordinate = sol.max_coordinate();

    std::vector<int> ones, fractional;
    for (const auto& [id, value] : sol.x) {
      if (value == 0) record.dropped.push_back(id);
      else if (value >= half) record.rounded.push_back(id);
      if (value == 1) ones.push_back(id);
      if (value > 0 && value < 1) fractional.push_back(id);
    }

    if (record.rounded.empty() && record.dropped.empty())
      throw TheoremViolation(
          "fully fractional vertex with max coordinate " +
              rational_to_string(record.max_coordinate) + " < 1/2",
          dump_state(options.label, graph, fixed, dropped, sol).dump(2));

    // The restriction to the strictly fractional coordinates is itself a
    // vertex of the peeled system; the theorem applies to it directly.
    if (!fractional.empty()) {
      VertexSolution peeled;
      peeled.objective_value = 0;
      Rational frac_max(0);
      for (int id : fractional) {
        peeled.x[id] = sol.x.at(id);
        peeled.objective_value += graph.edges[id].cost * sol.x.at(id);
        frac_max = std::max(frac_max, sol.x.at(id));
      }
      if (frac_max < half)
        throw TheoremViolation(
            "peeled fully fractional vertex with max coordinate " +
                rational_to_string(frac_max) + " < 1/2",
            dump_state(options.label, graph, fixed, dropped, sol).dump(2));

      if (options.certify_vertices && graph.n <= 12) {
        std::vector<int> fixed_and_ones = fixed_list;
        fixed_and_ones.insert(fixed_and_ones.end(), ones.begin(), ones.end());
        RequirementFn peeled_requirement = f.residual(ground, fixed_and_ones);
        record.certification =
            certify_fractional_vertex(peeled, peeled_requirement, graph, fractional);
      }
    }

    fixed.insert(record.rounded.begin(), record.rounded.end());
    dropped.insert(record.dropped.begin(), record.dropped.end());
    result.trace.iterations.push_back(std::move(record));
  }

  result.solution.assign(fixed.begin(), fixed.end());
  result.trace.solution = result.solution;
  for (int id : result.solution) result.trace.total_cost += graph.edges[id].cost;

  // The output must cover f; verified through the residual, which uses
  // the same exact min-cut machinery as the separation oracle.
  if (!f.residual(ground, result.solution).is_trivial())
    throw std::logic_error("rounding returned a set that does not cover the requirement");
  if (!result.trace.iterations.empty() &&
      result.trace.total_cost > 2 * result.trace.initial_lp_value)
    throw std::logic_error("2-approximation certificate failed: cost " +
                           rational_to_string(result.trace.total_cost) + " > 2 * " +
                           rational_to_string(result.trace.initial_lp_value));
  return result;
}

namespace {

void verify_ec_feasible(const EcInstance& inst, const std::vector<int>& edge_ids,
                        const char* what) {
  for (const auto& [pair, r] : inst.requirements.pairs()) {
    int have = edge_connectivity(inst.graph, edge_ids, pair.first, pair.second);
    if (have < r)
      throw InfeasibleError(std::string(what) + ": pair (" + std::to_string(pair.first) +
                            "," + std::to_string(pair.second) + ") needs " + std::to_string(r) +
                            " but connectivity is " + std::to_string(have));
  }
}

void verify_elem_feasible(const ElemInstance& inst, const std::vector<int>& edge_ids,
                          const char* what) {
  for (const auto& [pair, r] : inst.requirements.pairs()) {
    int have = element_connectivity(inst, edge_ids, pair.first, pair.second);
    if (have < r)
      throw InfeasibleError(std::string(what) + ": pair (" + std::to_string(pair.first) +
                            "," + std::to_string(pair.second) + ") needs " + std::to_string(r) +
                            " but element connectivity is " + std::to_string(have));
  }
}

void verify_hyper_feasible(const HyperInstance& inst, const std::vector<int>& hyperedge_ids,
                           const char* what) {
  for (const auto& [pair, r] : inst.requirements.pairs()) {
    int have = hyperedge_connectivity(inst.hyper, hyperedge_ids, pair.first, pair.second);
    if (have < r)
      throw InfeasibleError(std::string(what) + ": pair (" + std::to_string(pair.first) +
                            "," + std::to_string(pair.second) + ") needs " + std::to_string(r) +
                            " but hyperedge connectivity is " + std::to_string(have));
  }
}

std::vector<int> all_ids(int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  return ids;
}

}  // namespace

SolveResult solve_ecsndp(const EcInstance& instance, const JainOptions& options) {
  validate(instance);
  verify_ec_feasible(instance, all_ids(instance.graph.edge_count()), "infeasible instance");

  SolveResult result;
  result.guarantee = {"exact-2", Rational(2)};
  result.lower_bound = 0;
  result.total_cost = 0;

  RequirementFn f = RequirementFn::pairwise_max(instance.graph.n, instance.requirements);
  if (f.is_trivial()) return result;

  JainResult jain = jain_round(instance.graph, f, options);
  result.solution = jain.solution;
  result.trace = std::move(jain.trace);
  result.total_cost = result.trace.total_cost;
  result.lower_bound = result.trace.initial_lp_value;

  verify_ec_feasible(instance, result.solution, "output infeasible (bug)");
  return result;
}

SolveResult solve_hypersndp(const HyperInstance& instance, const JainOptions& options) {
  validate(instance);
  verify_hyper_feasible(instance, all_ids(instance.hyper.edge_count()), "infeasible instance");

  SolveResult result;
  const int d_plus = dplus(instance.hyper);

  if (d_plus <= 2) {
    // Zero-cost large hyperedges are taken for free; the rest is an
    // exact 2-approximation on the residual graph cover.
    HyperToGraphCoverResult reduction = hyper_to_graph_cover(instance);
    result.guarantee = {"exact-2", Rational(2)};
    result.lower_bound = 0;
    result.total_cost = 0;

    std::set<int> chosen(reduction.map.preincluded.begin(), reduction.map.preincluded.end());
    if (!reduction.requirement.is_trivial()) {
      JainResult jain = jain_round(reduction.graph, reduction.requirement, options);
      result.trace = std::move(jain.trace);
      result.lower_bound = result.trace.initial_lp_value;
      result.total_cost = result.trace.total_cost;
      for (int graph_id : jain.solution) chosen.insert(reduction.map.edge_map.at(graph_id));
    }
    result.solution.assign(chosen.begin(), chosen.end());
  } else {
    // Bipartite representation plus weight halving; the factor is dplus.
    HyperToNwElemResult bipartite = hyper_to_nw_elem(instance);
    NwToEwResult halved = nw_elem_to_ew_elem(bipartite.instance);
    SolveResult inner = solve_elemsndp(halved.instance, options);

    std::vector<int> pulled = prune_degree_one_uses(bipartite.instance, inner.solution);
    std::set<int> chosen;
    for (int id : pulled) {
      const Edge& e = halved.instance.graph.edges.at(id);
      int z = std::max(e.u, e.v);  // hyperedge nodes come after the terminals
      chosen.insert(z - instance.hyper.n);
    }
    result.solution.assign(chosen.begin(), chosen.end());
    result.trace = std::move(inner.trace);
    result.total_cost = 0;
    for (int id : result.solution) result.total_cost += instance.hyper.hyperedges[id].cost;
    // OPT_halved <= (dplus/2) OPT, so 2 LP / dplus is a valid exact
    // lower bound and the output cost stays within factor dplus of it.
    result.lower_bound = 2 * inner.lower_bound / d_plus;
    result.guarantee = {"halving-dplus", Rational(d_plus)};
    if (result.total_cost > result.guarantee.factor * result.lower_bound)
      throw std::logic_error("halving guarantee failed");
  }

  verify_hyper_feasible(instance, result.solution, "output infeasible (bug)");
  return result;
}

SolveResult solve_elemsndp(const ElemInstance& instance, const JainOptions& options) {
  validate(instance);
  verify_elem_feasible(instance, all_ids(instance.graph.edge_count()), "infeasible instance");

  ElemToHyperResult reduction = elem_to_hyper(instance);
  SolveResult hyper_result = solve_hypersndp(reduction.instance, options);

  SolveResult result;
  // Hyperedge ids below |E| are the original edges, id-preserving; the
  // non-terminal hyperedges map to no costed object.
  for (int id : hyper_result.solution)
    if (id < instance.graph.edge_count()) result.solution.push_back(id);
  result.trace = std::move(hyper_result.trace);
  result.total_cost = hyper_result.total_cost;
  result.lower_bound = hyper_result.lower_bound;
  result.guarantee = hyper_result.guarantee;

  verify_elem_feasible(instance, result.solution, "output infeasible (bug)");
  return result;
}

nlohmann::json solve_report_json(const SolveResult& result) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const IterationRecord& record : result.trace.iterations) {
    nlohmann::json it{{"lp_value", rational_to_json(record.lp_value)},
                      {"rounded", record.rounded},
                      {"dropped", record.dropped},
                      {"max_coord", rational_to_string(record.max_coordinate)}};
    if (record.certification) it["certification"] = record.certification->to_json();
    iterations.push_back(std::move(it));
  }
  return nlohmann::json{
      {"cost", rational_to_json(result.total_cost)},
      {"lp_lower_bound", rational_to_json(result.lower_bound)},
      {"edges", result.solution},
      {"iterations", iterations},
      {"guarantee",
       {{"factor", rational_to_json(result.guarantee.factor)}, {"path", result.guarantee.path}}},
      {"feasibility_checked", result.feasibility_checked}};
}

}  // namespace sndp
