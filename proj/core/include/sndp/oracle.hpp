#pragma once

#include "sndp/exactlp.hpp"
#include "sndp/instance.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sndp {

// Exhaustive ground truth for small instances: minimum-cost feasible
// edge/hyperedge subset, feasibility judged by the matching connectivity
// engine per required pair. Ties break to the lexicographically smallest
// id set. Gated at 20 edges / 10 vertices.
struct BruteForceResult {
  Rational cost;
  std::vector<int> witness;
};

BruteForceResult brute_force_opt(const Instance& instance);

// All vertices of the covering polytope, each with a basis certificate,
// found by enumerating n-subsets of rows and bounds (with incremental
// rank pruning) and keeping feasible, uniquely-determined solutions.
// Deduplicated by exact coordinate equality. Gated at 12 variables.
std::vector<VertexSolution> enumerate_vertices(const CoveringLP& lp);

// One random covering instance of the explorer, with the fully
// fractional vertex it reached (if the pipeline did not bottom out
// integrally).
struct ExplorationRecord {
  std::uint64_t seed = 0;
  HyperInstance instance;
  int degree = 0;  // actual max hyperedge size
  VertexSolution vertex;
  Rational max_coordinate;
  bool below_1_over_d = false;

  nlohmann::json to_json() const;
};

struct ExplorationSummary {
  int trials = 0;
  int fractional_vertices = 0;
  std::optional<Rational> min_max_coordinate;
  // histogram over [k/20, (k+1)/20), exact bucketing
  std::vector<int> histogram = std::vector<int>(20, 0);
  std::vector<ExplorationRecord> candidates;  // records with max < 1/d

  nlohmann::json to_json() const;
};

// Samples random hypergraph covering instances of degree <= d, peels
// integral coordinates the way the rounding loop does, and records the
// max coordinate of every fully-fractional vertex reached. A record
// below 1/d would answer the open problem negatively and is dumped with
// its full certificate; for d = 2 such a record contradicts the theorem
// and is a hard error.
ExplorationSummary explore_problem1(int d, int trials, std::uint64_t seed);

}  // namespace sndp
