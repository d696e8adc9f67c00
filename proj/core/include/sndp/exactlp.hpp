#pragma once

#include "sndp/instance.hpp"
#include "sndp/rational.hpp"
#include "sndp/requirement.hpp"
#include "sndp/sets.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sndp {

// One cut row x(delta(S)) >= rhs. Coefficients are 1 on edge_ids and 0
// elsewhere; rhs >= 1 (vacuous rows never enter the LP).
struct CoveringRow {
  std::vector<int> edge_ids;  // sorted, restricted to LP variables
  int rhs = 1;
  VertexSet tag = 0;          // the set S the row came from
};

// min c.x over { x in [0,1]^vars : every row holds }. Rows are
// deduplicated by their edge-id set (distinct sets with identical cut
// rows are LP-identical), keeping the largest rhs.
class CoveringLP {
 public:
  CoveringLP() = default;
  CoveringLP(std::vector<int> variable_ids, std::map<int, Rational> costs);

  // Returns true if the system changed. Rows with rhs <= 0 are dropped.
  bool add_row(VertexSet tag, std::vector<int> edge_ids, int rhs);

  const std::vector<int>& variable_ids() const { return variable_ids_; }
  const std::vector<CoveringRow>& rows() const { return rows_; }
  const Rational& cost(int edge_id) const { return costs_.at(edge_id); }
  const std::map<int, Rational>& costs() const { return costs_; }

 private:
  std::vector<int> variable_ids_;
  std::map<int, Rational> costs_;
  std::vector<CoveringRow> rows_;
  std::map<std::vector<int>, int> row_index_by_support_;
};

// One member of a basis certificate: a tight row or a tight bound.
struct BasisEntry {
  enum class Kind { Row, LowerBound, UpperBound };
  Kind kind = Kind::Row;
  int index = 0;  // row index for Kind::Row, edge id for bounds
};

// A basic feasible solution. The certificate lists exactly
// |variables| tight constraints whose characteristic vectors are
// linearly independent and uniquely determine x.
struct VertexSolution {
  std::map<int, Rational> x;  // edge id -> value
  Rational objective_value;
  std::vector<VertexSet> tight_rows;
  std::vector<BasisEntry> basis_certificate;

  Rational max_coordinate() const;
};

// Bounded simplex with Bland's anti-cycling rule over exact rationals.
// Requires x == 1 feasible (checked; violation signals an upstream bug
// since ground feasibility is validated at instance level).
VertexSolution solve_to_vertex(const CoveringLP& lp);

struct CertifyResult {
  bool ok = true;
  std::string reason;
};

// Re-verifies feasibility of every row and bound, re-checks that the
// certificate system has full rank by rational Gaussian elimination and
// that solving it reproduces x exactly.
CertifyResult certify_vertex(const VertexSolution& sol, const CoveringLP& lp);

// Covering instance driven through the cutting-plane loop: variables are
// the usable edge ids of `ground`, fixed edges contribute capacity 1 in
// the separation oracle, and the effective requirement is
// base.residual(ground, fixed).
struct CoveringProblem {
  Hypergraph ground;
  std::vector<int> variable_ids;
  RequirementFn requirement;  // effective; fixed structures ride along as masks
  std::map<int, Rational> costs;
};

struct CuttingPlaneResult {
  VertexSolution solution;
  CoveringLP lp;  // final relaxation, feasible for all cuts
  int rows_generated = 0;
};

// Solve-to-vertex / separate / add-row loop. Terminates when the oracle
// finds nothing, so the returned vertex is feasible for every cut of the
// effective requirement. warm_tags seeds rows from earlier iterations
// (their rhs is re-evaluated against the current residual). Explicit
// tables fall back to exhaustive separation, gated at n <= 10.
CuttingPlaneResult cutting_plane_solve(const CoveringProblem& problem,
                                       const std::vector<VertexSet>& warm_tags = {});

}  // namespace sndp
