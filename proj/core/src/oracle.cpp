#include "sndp/oracle.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"
#include "sndp/generate.hpp"
#include "sndp/io.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace sndp {

namespace {

struct GroundView {
  int n = 0;
  int edge_count = 0;
  std::function<Rational(int)> cost;
  std::function<bool(const std::vector<int>&)> feasible;
};

GroundView make_view(const Instance& instance) {
  GroundView view;
  switch (kind_of(instance)) {
    case InstanceKind::Ec: {
      const auto& inst = std::get<EcInstance>(instance);
      view.n = inst.graph.n;
      view.edge_count = inst.graph.edge_count();
      view.cost = [&inst](int id) { return inst.graph.edges[id].cost; };
      view.feasible = [&inst](const std::vector<int>& ids) {
        for (const auto& [pair, r] : inst.requirements.pairs())
          if (edge_connectivity(inst.graph, ids, pair.first, pair.second) < r) return false;
        return true;
      };
      break;
    }
    case InstanceKind::Elem: {
      const auto& inst = std::get<ElemInstance>(instance);
      view.n = inst.graph.n;
      view.edge_count = inst.graph.edge_count();
      view.cost = [&inst](int id) { return inst.graph.edges[id].cost; };
      view.feasible = [&inst](const std::vector<int>& ids) {
        for (const auto& [pair, r] : inst.requirements.pairs())
          if (element_connectivity(inst, ids, pair.first, pair.second) < r) return false;
        return true;
      };
      break;
    }
    case InstanceKind::Hyper: {
      const auto& inst = std::get<HyperInstance>(instance);
      view.n = inst.hyper.n;
      view.edge_count = inst.hyper.edge_count();
      view.cost = [&inst](int id) { return inst.hyper.hyperedges[id].cost; };
      view.feasible = [&inst](const std::vector<int>& ids) {
        for (const auto& [pair, r] : inst.requirements.pairs())
          if (hyperedge_connectivity(inst.hyper, ids, pair.first, pair.second) < r) return false;
        return true;
      };
      break;
    }
  }
  return view;
}

std::vector<int> ids_of_mask(std::uint32_t mask) {
  std::vector<int> ids;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) ids.push_back(i);
  return ids;
}

}  // namespace

BruteForceResult brute_force_opt(const Instance& instance) {
  validate(instance);
  GroundView view = make_view(instance);
  if (view.edge_count > 20) throw LimitError("brute force is capped at 20 edges");
  if (view.n > 10) throw LimitError("brute force is capped at 10 vertices");

  if (!view.feasible(ids_of_mask((std::uint32_t{1} << view.edge_count) - 1)))
    throw InfeasibleError("instance is infeasible even with every edge");

  // Costs are prefix-accumulated over the lowest set bit so scanning a
  // million subsets stays cheap; feasibility flows run only on subsets
  // that would improve the incumbent.
  const std::uint32_t subsets = std::uint32_t{1} << view.edge_count;
  std::vector<Rational> cost_of(subsets);
  cost_of[0] = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    int low = std::countr_zero(mask);
    cost_of[mask] = cost_of[mask & (mask - 1)] + view.cost(low);
  }

  bool have_best = false;
  Rational best_cost;
  std::vector<int> best_ids;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (have_best) {
      if (cost_of[mask] > best_cost) continue;
      if (cost_of[mask] == best_cost) {
        std::vector<int> ids = ids_of_mask(mask);
        if (!std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(),
                                          best_ids.end()))
          continue;
        if (!view.feasible(ids)) continue;
        best_ids = std::move(ids);
        continue;
      }
    }
    std::vector<int> ids = ids_of_mask(mask);
    if (!view.feasible(ids)) continue;
    best_cost = cost_of[mask];
    best_ids = std::move(ids);
    have_best = true;
  }
  return {best_cost, best_ids};
}

std::vector<VertexSolution> enumerate_vertices(const CoveringLP& lp) {
  const int n = static_cast<int>(lp.variable_ids().size());
  if (n > 12) throw LimitError("vertex enumeration is capped at 12 variables");

  struct Constraint {
    std::vector<Rational> coeffs;
    Rational rhs;
    BasisEntry entry;
  };
  std::vector<Constraint> constraints;
  std::map<int, int> var_pos;
  for (int j = 0; j < n; ++j) var_pos[lp.variable_ids()[j]] = j;

  for (int i = 0; i < static_cast<int>(lp.rows().size()); ++i) {
    Constraint c{std::vector<Rational>(n, Rational(0)), Rational(lp.rows()[i].rhs),
                 {BasisEntry::Kind::Row, i}};
    for (int id : lp.rows()[i].edge_ids) c.coeffs[var_pos.at(id)] = 1;
    constraints.push_back(std::move(c));
  }
  for (int j = 0; j < n; ++j) {
    Constraint lower{std::vector<Rational>(n, Rational(0)), Rational(0),
                     {BasisEntry::Kind::LowerBound, lp.variable_ids()[j]}};
    lower.coeffs[j] = 1;
    constraints.push_back(std::move(lower));
    Constraint upper{std::vector<Rational>(n, Rational(0)), Rational(1),
                     {BasisEntry::Kind::UpperBound, lp.variable_ids()[j]}};
    upper.coeffs[j] = 1;
    constraints.push_back(std::move(upper));
  }

  constexpr long kWorkCap = 4'000'000;
  long work = 0;

  std::vector<VertexSolution> vertices;
  std::vector<std::vector<Rational>> seen;

  std::vector<int> chosen;
  std::function<void(int, detail::RankTracker&)> recurse = [&](int start,
                                                               detail::RankTracker& tracker) {
    if (static_cast<int>(chosen.size()) == n) {
      std::vector<std::vector<Rational>> matrix;
      std::vector<Rational> rhs;
      for (int c : chosen) {
        matrix.push_back(constraints[c].coeffs);
        rhs.push_back(constraints[c].rhs);
      }
      auto solved = detail::solve_square(std::move(matrix), std::move(rhs));
      if (!solved) return;

      for (const Rational& value : *solved)
        if (value < 0 || value > 1) return;
      for (const CoveringRow& row : lp.rows()) {
        Rational total(0);
        for (int id : row.edge_ids) total += (*solved)[var_pos.at(id)];
        if (total < row.rhs) return;
      }
      if (std::find(seen.begin(), seen.end(), *solved) != seen.end()) return;
      seen.push_back(*solved);

      VertexSolution sol;
      sol.objective_value = 0;
      for (int j = 0; j < n; ++j) {
        int id = lp.variable_ids()[j];
        sol.x[id] = (*solved)[j];
        sol.objective_value += lp.cost(id) * (*solved)[j];
      }
      for (const CoveringRow& row : lp.rows()) {
        Rational total(0);
        for (int id : row.edge_ids) total += sol.x.at(id);
        if (total == row.rhs) sol.tight_rows.push_back(row.tag);
      }
      for (int c : chosen) sol.basis_certificate.push_back(constraints[c].entry);
      vertices.push_back(std::move(sol));
      return;
    }
    int needed = n - static_cast<int>(chosen.size());
    for (int c = start; c + needed <= static_cast<int>(constraints.size()); ++c) {
      if (++work > kWorkCap) throw LimitError("vertex enumeration work cap exceeded");
      detail::RankTracker next = tracker;
      if (!next.add_if_independent(constraints[c].coeffs)) continue;
      chosen.push_back(c);
      recurse(c + 1, next);
      chosen.pop_back();
    }
  };

  detail::RankTracker tracker(n);
  recurse(0, tracker);
  return vertices;
}

nlohmann::json ExplorationRecord::to_json() const {
  nlohmann::json x = nlohmann::json::object();
  for (const auto& [id, value] : vertex.x) x[std::to_string(id)] = rational_to_string(value);
  return nlohmann::json{{"seed", seed},
                        {"instance", instance_to_json(Instance(instance))},
                        {"degree", degree},
                        {"x", x},
                        {"max_coordinate", rational_to_string(max_coordinate)},
                        {"below_1_over_d", below_1_over_d}};
}

nlohmann::json ExplorationSummary::to_json() const {
  nlohmann::json buckets = nlohmann::json::array();
  for (int k = 0; k < static_cast<int>(histogram.size()); ++k)
    buckets.push_back({{"bucket", std::to_string(k) + "/20.." + std::to_string(k + 1) + "/20"},
                       {"count", histogram[k]}});
  nlohmann::json candidate_list = nlohmann::json::array();
  for (const ExplorationRecord& record : candidates) candidate_list.push_back(record.to_json());
  return nlohmann::json{
      {"trials", trials},
      {"fractional_vertices", fractional_vertices},
      {"min_max_coordinate",
       min_max_coordinate ? nlohmann::json(rational_to_string(*min_max_coordinate))
                          : nlohmann::json(nullptr)},
      {"histogram", buckets},
      {"counterexample_candidates", candidate_list}};
}

namespace {

// Mirrors the rounding loop: fix the ones, drop the zeros, re-solve the
// residual, so the open problem is probed on fully fractional vertices.
std::optional<VertexSolution> fully_fractional_vertex(const HyperInstance& inst) {
  RequirementFn f = RequirementFn::pairwise_max(inst.hyper.n, inst.requirements);
  std::set<int> fixed, gone;
  while (true) {
    std::vector<int> fixed_list(fixed.begin(), fixed.end());
    RequirementFn residual = f.residual(inst.hyper, fixed_list);
    if (residual.is_trivial()) return std::nullopt;

    CoveringProblem problem;
    problem.ground = inst.hyper;
    problem.requirement = residual;
    for (int id = 0; id < inst.hyper.edge_count(); ++id)
      if (!fixed.count(id) && !gone.count(id)) {
        problem.variable_ids.push_back(id);
        problem.costs[id] = inst.hyper.hyperedges[id].cost;
      }
    if (problem.variable_ids.empty()) return std::nullopt;

    VertexSolution sol = cutting_plane_solve(problem).solution;
    bool integral_part = false;
    for (const auto& [id, value] : sol.x) {
      if (value == 1) {
        fixed.insert(id);
        integral_part = true;
      } else if (value == 0) {
        gone.insert(id);
        integral_part = true;
      }
    }
    if (!integral_part) return sol;
  }
}

}  // namespace

ExplorationSummary explore_problem1(int d, int trials, std::uint64_t seed) {
  if (d < 2) throw ValidationError("explorer requires d >= 2");
  if (trials < 1) throw ValidationError("explorer requires at least one trial");

  ExplorationSummary summary;
  summary.trials = trials;

  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial);
    SeededRng rng(trial_seed);

    GenParams params;
    params.kind = InstanceKind::Hyper;
    params.n = rng.next_in(4, 7);
    params.max_degree = d;
    params.rmax = rng.next_in(1, 3);
    params.pair_count = rng.next_in(1, 2);
    // room for the planted structure: ceil(rmax/2) cycles over at most
    // 2 * pair_count required vertices
    int worst_plant = ((params.rmax + 1) / 2) * std::max(2, 2 * params.pair_count);
    params.count = std::max(params.n + rng.next_in(0, 3), worst_plant + 1);
    params.cost_lo = 1;
    params.cost_hi = 10;
    params.seed = trial_seed;

    HyperInstance inst = std::get<HyperInstance>(generate(params));
    auto vertex = fully_fractional_vertex(inst);
    if (!vertex) continue;

    ExplorationRecord record;
    record.seed = trial_seed;
    record.instance = inst;
    record.degree = 0;
    for (const Hyperedge& e : inst.hyper.hyperedges)
      record.degree = std::max(record.degree, e.size());
    record.vertex = *vertex;
    record.max_coordinate = vertex->max_coordinate();
    record.below_1_over_d = record.max_coordinate < make_rational(1, record.degree);

    ++summary.fractional_vertices;
    if (!summary.min_max_coordinate || record.max_coordinate < *summary.min_max_coordinate)
      summary.min_max_coordinate = record.max_coordinate;

    // Exact bucket floor(20 * max), clamped into [0, 19].
    mpz_class scaled = record.max_coordinate.get_num() * 20 / record.max_coordinate.get_den();
    long bucket = std::min(19L, std::max(0L, scaled.get_si()));
    ++summary.histogram[static_cast<std::size_t>(bucket)];

    if (record.below_1_over_d) {
      if (record.degree <= 2)
        throw std::logic_error(
            "explorer found a degree-2 vertex below 1/2; this contradicts the theorem "
            "(dump: " + record.to_json().dump() + ")");
      summary.candidates.push_back(std::move(record));
    }
  }
  return summary;
}

}  // namespace sndp
