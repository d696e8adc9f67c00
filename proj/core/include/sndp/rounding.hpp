#pragma once

#include "sndp/certify.hpp"
#include "sndp/exactlp.hpp"
#include "sndp/instance.hpp"
#include "sndp/requirement.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sndp {

struct IterationRecord {
  Rational lp_value;
  VertexSolution vertex;
  std::vector<int> rounded;  // x >= 1/2, fixed into the solution
  std::vector<int> dropped;  // x == 0, deleted from the ground set
  Rational max_coordinate;
  // Certification of the fully-fractional part (when n <= 12 and the
  // part is nonempty).
  std::optional<VertexCertification> certification;
};

struct RoundingTrace {
  Rational initial_lp_value;
  std::vector<IterationRecord> iterations;
  std::vector<int> solution;
  Rational total_cost;
};

struct JainOptions {
  // Run half-edge and laminar certification on every fully-fractional
  // vertex encountered (laminar only when the ground has <= 12 vertices).
  bool certify_vertices = true;
  // Context string included in theorem-violation dumps.
  std::string label;
};

struct JainResult {
  std::vector<int> solution;
  RoundingTrace trace;
};

// Iterated rounding: solve the LP over the remaining edges to a vertex,
// delete the zero edges, fix every edge with x >= 1/2, take the residual
// requirement, repeat until it is trivial. The returned solution covers
// f (verified through the separation oracle) and costs at most twice the
// first LP value, both checked exactly. A fully-fractional vertex with
// max coordinate < 1/2 throws TheoremViolation with a full dump.
JainResult jain_round(const Graph& graph, const RequirementFn& f,
                      const JainOptions& options = {});

struct GuaranteeNote {
  std::string path;  // "exact-2" or "halving-dplus"
  Rational factor;
};

struct SolveResult {
  std::vector<int> solution;  // ids in the original instance
  RoundingTrace trace;
  Rational total_cost;
  Rational lower_bound;  // exact lower bound on OPT of the original instance
  GuaranteeNote guarantee;
  bool feasibility_checked = true;
};

// f(S) = max r(uv) over pairs split by S; output connectivity is
// re-verified by max-flow per required pair.
SolveResult solve_ecsndp(const EcInstance& instance, const JainOptions& options = {});

// Reduction pipeline elem -> hyper -> graph cover -> jain_round, mapped
// back to original edge ids; element connectivity of the output is
// re-verified with split-graph flows. Node-weighted instances route
// through the hypergraph solver.
SolveResult solve_elemsndp(const ElemInstance& instance, const JainOptions& options = {});

// dplus <= 2: exact 2-approximation via the graph-cover residual.
// Otherwise: bipartite representation, weight halving, Elem-SNDP, and a
// proven factor of dplus. guarantee.path records which route ran.
SolveResult solve_hypersndp(const HyperInstance& instance, const JainOptions& options = {});

// Report JSON emitted by `solve`:
//   {"cost":..,"lp_lower_bound":..,"edges":[..],"iterations":[..],
//    "guarantee":{..},"feasibility_checked":true}
nlohmann::json solve_report_json(const SolveResult& result);

}  // namespace sndp
