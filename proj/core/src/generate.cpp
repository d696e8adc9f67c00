#include "sndp/generate.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sndp {

// splitmix64: portable and stateless enough that instances are
// reproducible across platforms, unlike distribution-wrapped engines.
std::uint64_t SeededRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
  return next() % bound;
}

int SeededRng::next_in(int lo, int hi) {
  return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

Rational random_cost(SeededRng& rng, const GenParams& p) {
  return Rational(static_cast<long>(p.cost_lo + static_cast<long>(rng.next_below(
                      static_cast<std::uint64_t>(p.cost_hi - p.cost_lo + 1)))));
}

std::vector<int> sample_distinct(SeededRng& rng, const std::vector<int>& pool, int count) {
  std::vector<int> shuffled = pool;
  for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
    std::swap(shuffled[i], shuffled[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
  shuffled.resize(count);
  return shuffled;
}

PairRequirements sample_requirements(SeededRng& rng, const std::vector<int>& vertices,
                                     int pair_count, int rmax) {
  const long max_pairs =
      static_cast<long>(vertices.size()) * (static_cast<long>(vertices.size()) - 1) / 2;
  if (pair_count > max_pairs)
    throw ValidationError("pair_count exceeds the number of available pairs");

  PairRequirements reqs;
  std::set<std::pair<int, int>> used;
  int attempts = 0;
  while (static_cast<int>(used.size()) < pair_count) {
    if (++attempts > 1000 * pair_count + 1000)
      throw ValidationError("could not place the requested requirement pairs");
    int a = vertices[rng.next_below(vertices.size())];
    int b = vertices[rng.next_below(vertices.size())];
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!used.insert({key.first, key.second}).second) continue;
    reqs.set(a, b, rmax >= 1 ? rng.next_in(1, rmax) : 0);
  }
  return reqs;
}

// Edges that make the required vertices rmax-connected: a path for
// rmax = 1, ceil(rmax/2) cycles otherwise (each cycle adds 2 to every
// cut separating two required vertices). For elem instances the planted
// edges run between terminals only, so the bound holds for element
// connectivity as well.
std::vector<std::pair<int, int>> planted_edges(SeededRng& rng, std::vector<int> required,
                                               int rmax) {
  std::vector<std::pair<int, int>> edges;
  if (required.size() < 2 || rmax < 1) return edges;
  if (rmax == 1) {
    required = sample_distinct(rng, required, static_cast<int>(required.size()));
    for (std::size_t i = 0; i + 1 < required.size(); ++i)
      edges.emplace_back(required[i], required[i + 1]);
    return edges;
  }
  int copies = (rmax + 1) / 2;
  for (int c = 0; c < copies; ++c) {
    std::vector<int> order = sample_distinct(rng, required, static_cast<int>(required.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
      edges.emplace_back(order[i], order[(i + 1) % order.size()]);
  }
  return edges;
}

std::vector<int> required_vertices(const PairRequirements& reqs) {
  std::set<int> vs;
  for (const auto& [pair, r] : reqs.pairs()) {
    vs.insert(pair.first);
    vs.insert(pair.second);
  }
  return {vs.begin(), vs.end()};
}

std::vector<int> all_ids(int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  return ids;
}

}  // namespace

Instance generate(const GenParams& params) {
  if (params.n < 2) throw ValidationError("generator requires n >= 2");
  if (params.count < 0 || params.rmax < 0) throw ValidationError("negative generator parameter");
  if (params.cost_lo < 0 || params.cost_lo > params.cost_hi)
    throw ValidationError("invalid cost range");
  if (params.kind == InstanceKind::Hyper && params.max_degree < 2)
    throw ValidationError("hypergraph generator requires max_degree >= 2");

  SeededRng rng(params.seed);
  const int pair_count = params.pair_count > 0 ? params.pair_count : std::max(1, params.n / 2);

  Instance out;
  switch (params.kind) {
    case InstanceKind::Ec: {
      EcInstance inst;
      inst.graph.n = params.n;
      std::vector<int> vertices = all_ids(params.n);
      inst.requirements = sample_requirements(rng, vertices, pair_count, params.rmax);

      auto plant = planted_edges(rng, required_vertices(inst.requirements), params.rmax);
      if (static_cast<int>(plant.size()) > params.count)
        throw ValidationError("edge budget " + std::to_string(params.count) +
                              " is too small for a feasible instance (needs " +
                              std::to_string(plant.size()) + ")");
      for (auto [u, v] : plant) inst.graph.edges.push_back({u, v, random_cost(rng, params)});
      while (inst.graph.edge_count() < params.count) {
        int u = rng.next_in(0, params.n - 1);
        int v = rng.next_in(0, params.n - 1);
        if (u == v) continue;
        inst.graph.edges.push_back({u, v, random_cost(rng, params)});
      }

      validate(inst);
      for (const auto& [pair, r] : inst.requirements.pairs())
        if (edge_connectivity(inst.graph, all_ids(inst.graph.edge_count()), pair.first,
                              pair.second) < r)
          throw std::logic_error("planted ec instance is infeasible");
      out = std::move(inst);
      break;
    }
    case InstanceKind::Elem: {
      ElemInstance inst;
      inst.graph.n = params.n;
      int terminal_count = params.terminal_count > 0 ? params.terminal_count
                                                     : std::max(2, params.n / 2);
      if (terminal_count > params.n)
        throw ValidationError("terminal_count exceeds n");
      std::vector<int> terminals = sample_distinct(rng, all_ids(params.n), terminal_count);
      inst.terminals = {terminals.begin(), terminals.end()};
      inst.requirements = sample_requirements(rng, terminals, pair_count, params.rmax);

      auto plant = planted_edges(rng, required_vertices(inst.requirements), params.rmax);
      if (static_cast<int>(plant.size()) > params.count)
        throw ValidationError("edge budget " + std::to_string(params.count) +
                              " is too small for a feasible instance (needs " +
                              std::to_string(plant.size()) + ")");
      for (auto [u, v] : plant) inst.graph.edges.push_back({u, v, random_cost(rng, params)});
      while (inst.graph.edge_count() < params.count) {
        int u = rng.next_in(0, params.n - 1);
        int v = rng.next_in(0, params.n - 1);
        if (u == v) continue;
        inst.graph.edges.push_back({u, v, random_cost(rng, params)});
      }

      validate(inst);
      for (const auto& [pair, r] : inst.requirements.pairs())
        if (element_connectivity(inst, all_ids(inst.graph.edge_count()), pair.first,
                                 pair.second) < r)
          throw std::logic_error("planted elem instance is infeasible");
      out = std::move(inst);
      break;
    }
    case InstanceKind::Hyper: {
      HyperInstance inst;
      inst.hyper.n = params.n;
      std::vector<int> vertices = all_ids(params.n);
      inst.requirements = sample_requirements(rng, vertices, pair_count, params.rmax);

      auto plant = planted_edges(rng, required_vertices(inst.requirements), params.rmax);
      if (static_cast<int>(plant.size()) > params.count)
        throw ValidationError("hyperedge budget " + std::to_string(params.count) +
                              " is too small for a feasible instance (needs " +
                              std::to_string(plant.size()) + ")");
      for (auto [u, v] : plant) {
        Hyperedge he;
        he.vertices = {std::min(u, v), std::max(u, v)};
        he.cost = random_cost(rng, params);
        inst.hyper.hyperedges.push_back(std::move(he));
      }
      while (inst.hyper.edge_count() < params.count) {
        int size = rng.next_in(2, std::min(params.max_degree, params.n));
        Hyperedge he;
        he.vertices = sample_distinct(rng, vertices, size);
        std::sort(he.vertices.begin(), he.vertices.end());
        he.cost = random_cost(rng, params);
        inst.hyper.hyperedges.push_back(std::move(he));
      }

      validate(inst);
      for (const auto& [pair, r] : inst.requirements.pairs())
        if (hyperedge_connectivity(inst.hyper, all_ids(inst.hyper.edge_count()), pair.first,
                                   pair.second) < r)
          throw std::logic_error("planted hyper instance is infeasible");
      out = std::move(inst);
      break;
    }
  }
  return out;
}

}  // namespace sndp
