#pragma once

#include "sndp/instance.hpp"
#include "sndp/sets.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sndp {

// Requirement functions f: 2^V -> Z that the solvers cover by graphs.
// Three kinds: the pairwise max induced by connectivity requirements,
// an explicit table (n <= 16, test instrument), and residuals
// f - |delta_F|. Residual layers are normalized at construction into a
// single multiset of crossing masks, so nesting never stacks up.
class RequirementFn {
 public:
  struct PairwiseMax {
    PairRequirements reqs;
  };
  struct ExplicitTable {
    std::vector<int> values;  // 2^n entries indexed by vertex mask
  };

  // Default: the zero function on an empty ground set.
  RequirementFn() : base_(PairwiseMax{}) {}

  static RequirementFn pairwise_max(int n, PairRequirements reqs);
  static RequirementFn explicit_table(int n, std::vector<int> values);

  int ground_size() const { return n_; }

  int eval(VertexSet s) const;

  // g(S) = f(S) - |delta_fixed(S)| with fixed a sub(multi)set of the
  // ground's edges; g is skew-supermodular whenever f is.
  RequirementFn residual(const Hypergraph& ground, const std::vector<int>& fixed_ids) const;

  bool is_pairwise_kind() const { return std::holds_alternative<PairwiseMax>(base_); }
  const PairRequirements* pairwise_reqs() const;
  const std::vector<VertexSet>& fixed_masks() const { return fixed_masks_; }

  // true iff f(S) <= 0 for every proper nonempty S. Pairwise kinds use
  // the rmax shortcut plus an exact min-cut check against the fixed
  // multiset; explicit tables enumerate.
  bool is_trivial() const;

 private:
  int base_eval(VertexSet s) const;

  int n_ = 0;
  std::variant<PairwiseMax, ExplicitTable> base_;
  std::vector<VertexSet> fixed_masks_;
};

struct PairCounterexample {
  VertexSet a = 0;
  VertexSet b = 0;
};

// Exhaustively verifies, for all A, B subsets of V, that
//   f(A) + f(B) <= f(A int B) + f(A cup B)   or
//   f(A) + f(B) <= f(A - B) + f(B - A).
// Returns the first failing pair, nullopt on pass. Gated at n <= 8.
std::optional<PairCounterexample> check_skew_supermodular(const RequirementFn& f);

enum class SubmodularProperty { Symmetry, Submodularity, PosiModularity };

struct SubmodularCounterexample {
  SubmodularProperty property;
  VertexSet a = 0;
  VertexSet b = 0;
};

// Exhaustively verifies that |delta_F| over the given ground is
// symmetric, submodular and posi-modular. Gated at n <= 8.
std::optional<SubmodularCounterexample> check_symmetric_submodular(
    const Hypergraph& ground, const std::vector<int>& edge_subset);

// Same three checks for an arbitrary explicit table (negative controls).
std::optional<SubmodularCounterexample> check_symmetric_submodular_table(
    int n, const std::vector<int>& values);

}  // namespace sndp
