#include "sndp/exactlp.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace sndp {

CoveringLP::CoveringLP(std::vector<int> variable_ids, std::map<int, Rational> costs)
    : variable_ids_(std::move(variable_ids)), costs_(std::move(costs)) {
  for (int id : variable_ids_)
    if (!costs_.count(id)) throw ValidationError("missing cost for variable " + std::to_string(id));
}

bool CoveringLP::add_row(VertexSet tag, std::vector<int> edge_ids, int rhs) {
  if (rhs <= 0) return false;  // vacuous under x >= 0
  std::sort(edge_ids.begin(), edge_ids.end());
  auto it = row_index_by_support_.find(edge_ids);
  if (it != row_index_by_support_.end()) {
    CoveringRow& existing = rows_[it->second];
    if (existing.rhs >= rhs) return false;
    existing.rhs = rhs;
    existing.tag = tag;
    return true;
  }
  int index = static_cast<int>(rows_.size());
  rows_.push_back(CoveringRow{edge_ids, rhs, tag});
  row_index_by_support_.emplace(std::move(edge_ids), index);
  return true;
}

Rational VertexSolution::max_coordinate() const {
  Rational best(0);
  for (const auto& [id, value] : x) best = std::max(best, value);
  return best;
}

namespace {

// Bounded simplex in the complemented variables y = 1 - x, which turns
// the covering LP into a packing LP whose slack basis is feasible:
//   max c.y   s.t.  y(row_i) <= |row_i| - rhs_i,  0 <= y <= 1.
// Columns: y_0..y_{n-1}, s_0..s_{R-1}, t_0..t_{n-1}.
class PackingSimplex {
 public:
  PackingSimplex(const CoveringLP& lp) : lp_(lp) {
    n_ = static_cast<int>(lp.variable_ids().size());
    r_ = static_cast<int>(lp.rows().size());
    cols_ = 2 * n_ + r_;

    var_pos_.clear();
    for (int j = 0; j < n_; ++j) var_pos_[lp.variable_ids()[j]] = j;

    tableau_.assign(r_ + n_, std::vector<Rational>(cols_ + 1, Rational(0)));
    for (int i = 0; i < r_; ++i) {
      const CoveringRow& row = lp.rows()[i];
      int slack_rhs = static_cast<int>(row.edge_ids.size()) - row.rhs;
      if (slack_rhs < 0)
        throw InfeasibleError("row " + std::to_string(i) +
                              " cannot be met even with every edge taken");
      for (int id : row.edge_ids) tableau_[i][var_pos_.at(id)] = 1;
      tableau_[i][n_ + i] = 1;
      tableau_[i][cols_] = slack_rhs;
    }
    for (int j = 0; j < n_; ++j) {
      tableau_[r_ + j][j] = 1;
      tableau_[r_ + j][n_ + r_ + j] = 1;
      tableau_[r_ + j][cols_] = 1;
    }

    basis_.resize(r_ + n_);
    for (int i = 0; i < r_; ++i) basis_[i] = n_ + i;
    for (int j = 0; j < n_; ++j) basis_[r_ + j] = n_ + r_ + j;

    objective_.assign(cols_ + 1, Rational(0));
    for (int j = 0; j < n_; ++j) objective_[j] = lp.cost(lp.variable_ids()[j]);
  }

  void run() {
    while (true) {
      // Bland: entering variable is the lowest-index improving column.
      int entering = -1;
      for (int j = 0; j < cols_; ++j)
        if (objective_[j] > 0) {
          entering = j;
          break;
        }
      if (entering < 0) return;

      // Lowest basic index breaks ratio ties (Bland's leaving rule).
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < r_ + n_; ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rational ratio = tableau_[i][cols_] / tableau_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // y <= 1 bounds every column, so the LP is never unbounded.
      assert(leaving >= 0);
      pivot(leaving, entering);
    }
  }

  VertexSolution extract() const {
    std::vector<Rational> y(cols_, Rational(0));
    for (int i = 0; i < r_ + n_; ++i) y[basis_[i]] = tableau_[i][cols_];

    VertexSolution sol;
    sol.objective_value = 0;
    for (int j = 0; j < n_; ++j) {
      int id = lp_.variable_ids()[j];
      Rational xj = Rational(1) - y[j];
      sol.objective_value += lp_.cost(id) * xj;
      sol.x[id] = std::move(xj);
    }

    for (const CoveringRow& row : lp_.rows()) {
      Rational total(0);
      for (int id : row.edge_ids) total += sol.x.at(id);
      if (total == row.rhs) sol.tight_rows.push_back(row.tag);
    }

    // The nonbasic columns name exactly n tight constraints that pin the
    // vertex: y_j -> x_j = 1, s_i -> row i tight, t_j -> x_j = 0.
    std::vector<char> basic(cols_, 0);
    for (int b : basis_) basic[b] = 1;
    for (int col = 0; col < cols_; ++col) {
      if (basic[col]) continue;
      BasisEntry entry;
      if (col < n_) {
        entry.kind = BasisEntry::Kind::UpperBound;
        entry.index = lp_.variable_ids()[col];
      } else if (col < n_ + r_) {
        entry.kind = BasisEntry::Kind::Row;
        entry.index = col - n_;
      } else {
        entry.kind = BasisEntry::Kind::LowerBound;
        entry.index = lp_.variable_ids()[col - n_ - r_];
      }
      sol.basis_certificate.push_back(entry);
    }
    assert(static_cast<int>(sol.basis_certificate.size()) == n_);
    return sol;
  }

 private:
  void pivot(int row, int col) {
    Rational inv = tableau_[row][col];
    for (int j = 0; j <= cols_; ++j) tableau_[row][j] /= inv;
    for (int i = 0; i < r_ + n_; ++i) {
      if (i == row) continue;
      Rational factor = tableau_[i][col];
      if (factor == 0) continue;
      for (int j = 0; j <= cols_; ++j) tableau_[i][j] -= factor * tableau_[row][j];
    }
    Rational obj_factor = objective_[col];
    if (obj_factor != 0)
      for (int j = 0; j <= cols_; ++j) objective_[j] -= obj_factor * tableau_[row][j];
    basis_[row] = col;
  }

  const CoveringLP& lp_;
  int n_ = 0, r_ = 0, cols_ = 0;
  std::map<int, int> var_pos_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> objective_;
  std::vector<int> basis_;
};

}  // namespace

VertexSolution solve_to_vertex(const CoveringLP& lp) {
  PackingSimplex simplex(lp);
  simplex.run();
  return simplex.extract();
}

CertifyResult certify_vertex(const VertexSolution& sol, const CoveringLP& lp) {
  const int n = static_cast<int>(lp.variable_ids().size());
  std::map<int, int> var_pos;
  for (int j = 0; j < n; ++j) var_pos[lp.variable_ids()[j]] = j;

  for (int id : lp.variable_ids()) {
    auto it = sol.x.find(id);
    if (it == sol.x.end()) return {false, "missing value for variable " + std::to_string(id)};
    if (it->second < 0 || it->second > 1)
      return {false, "variable " + std::to_string(id) + " outside [0,1]"};
  }
  for (std::size_t i = 0; i < lp.rows().size(); ++i) {
    const CoveringRow& row = lp.rows()[i];
    Rational total(0);
    for (int id : row.edge_ids) total += sol.x.at(id);
    if (total < row.rhs)
      return {false, "row " + std::to_string(i) + " violated: " + rational_to_string(total) +
                         " < " + std::to_string(row.rhs)};
  }

  if (static_cast<int>(sol.basis_certificate.size()) != n)
    return {false, "not uniquely determined: certificate has " +
                       std::to_string(sol.basis_certificate.size()) + " entries, expected " +
                       std::to_string(n)};

  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (const BasisEntry& entry : sol.basis_certificate) {
    std::vector<Rational> coeffs(n, Rational(0));
    Rational target;
    switch (entry.kind) {
      case BasisEntry::Kind::Row: {
        if (entry.index < 0 || entry.index >= static_cast<int>(lp.rows().size()))
          return {false, "certificate row index out of range"};
        const CoveringRow& row = lp.rows()[entry.index];
        for (int id : row.edge_ids) coeffs[var_pos.at(id)] = 1;
        target = row.rhs;
        break;
      }
      case BasisEntry::Kind::LowerBound:
        coeffs[var_pos.at(entry.index)] = 1;
        target = 0;
        break;
      case BasisEntry::Kind::UpperBound:
        coeffs[var_pos.at(entry.index)] = 1;
        target = 1;
        break;
    }
    Rational actual(0);
    for (int j = 0; j < n; ++j)
      if (coeffs[j] != 0) actual += sol.x.at(lp.variable_ids()[j]);
    if (actual != target) return {false, "certificate entry is not tight"};
    matrix.push_back(std::move(coeffs));
    rhs.push_back(std::move(target));
  }

  detail::RankTracker tracker(n);
  int rank = 0;
  for (const auto& row : matrix)
    if (tracker.add_if_independent(row)) ++rank;
  if (rank < n)
    return {false, "not uniquely determined: rank " + std::to_string(rank) + " < " +
                       std::to_string(n)};

  auto solved = detail::solve_square(matrix, rhs);
  if (!solved) return {false, "certificate system is singular"};
  for (int j = 0; j < n; ++j)
    if ((*solved)[j] != sol.x.at(lp.variable_ids()[j]))
      return {false, "certificate system does not reproduce the solution"};
  return {true, ""};
}

namespace {

std::optional<ViolatedCut> separate_exhaustive(const CoveringProblem& problem,
                                               const VertexSolution& sol) {
  const int n = problem.ground.n;
  if (n > 10) throw LimitError("exhaustive separation is capped at n <= 10");
  std::vector<VertexSet> var_masks;
  var_masks.reserve(problem.variable_ids.size());
  for (int id : problem.variable_ids)
    var_masks.push_back(problem.ground.hyperedges.at(id).mask());

  const VertexSet all = full_set(n);
  for (VertexSet s = 1; s < all; ++s) {
    int need = problem.requirement.eval(s);
    if (need < 1) continue;
    Rational have(0);
    for (std::size_t j = 0; j < var_masks.size(); ++j)
      if (edge_crosses(var_masks[j], s, n)) have += sol.x.at(problem.variable_ids[j]);
    if (have < need) {
      ViolatedCut cut;
      cut.side = s;
      cut.deficit = Rational(need) - have;
      return cut;
    }
  }
  return std::nullopt;
}

std::optional<ViolatedCut> separate_by_flow(const CoveringProblem& problem,
                                            const VertexSolution& sol) {
  std::vector<WeightedElement> elements;
  for (int id : problem.variable_ids) {
    const Rational& value = sol.x.at(id);
    if (value > 0) elements.push_back({problem.ground.hyperedges.at(id).mask(), value});
  }
  for (VertexSet mask : problem.requirement.fixed_masks())
    elements.push_back({mask, Rational(1)});
  return find_violated_cut_elements(problem.ground.n, elements,
                                    *problem.requirement.pairwise_reqs());
}

}  // namespace

CuttingPlaneResult cutting_plane_solve(const CoveringProblem& problem,
                                       const std::vector<VertexSet>& warm_tags) {
  const bool pairwise = problem.requirement.is_pairwise_kind();
  if (!pairwise && problem.ground.n > 10)
    throw LimitError("oracle unavailable: explicit tables are separated exhaustively (n <= 10)");

  CuttingPlaneResult result;
  result.lp = CoveringLP(problem.variable_ids, problem.costs);

  std::set<int> variable_set(problem.variable_ids.begin(), problem.variable_ids.end());
  auto row_support = [&](VertexSet tag) {
    std::vector<int> ids;
    for (int id : delta_ids(problem.ground, tag))
      if (variable_set.count(id)) ids.push_back(id);
    return ids;
  };

  for (VertexSet tag : warm_tags)
    result.lp.add_row(tag, row_support(tag), problem.requirement.eval(tag));

  while (true) {
    result.solution = solve_to_vertex(result.lp);
    auto cut = pairwise ? separate_by_flow(problem, result.solution)
                        : separate_exhaustive(problem, result.solution);
    if (!cut) return result;
    int rhs = problem.requirement.eval(cut->side);
    bool changed = result.lp.add_row(cut->side, row_support(cut->side), rhs);
    if (!changed)
      throw std::logic_error("separation produced a cut already present in the LP");
    ++result.rows_generated;
  }
}

}  // namespace sndp
