#include "sndp/requirement.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"

#include <algorithm>
#include <string>

namespace sndp {

RequirementFn RequirementFn::pairwise_max(int n, PairRequirements reqs) {
  RequirementFn f;
  f.n_ = n;
  f.base_ = PairwiseMax{std::move(reqs)};
  return f;
}

RequirementFn RequirementFn::explicit_table(int n, std::vector<int> values) {
  if (n > 16) throw LimitError("explicit tables are capped at n <= 16");
  if (values.size() != (std::size_t{1} << n))
    throw ValidationError("explicit table must have 2^n entries");
  RequirementFn f;
  f.n_ = n;
  f.base_ = ExplicitTable{std::move(values)};
  return f;
}

int RequirementFn::base_eval(VertexSet s) const {
  if (const auto* pm = std::get_if<PairwiseMax>(&base_)) {
    int best = 0;
    for (const auto& [pair, r] : pm->reqs.pairs())
      if (contains(s, pair.first) != contains(s, pair.second)) best = std::max(best, r);
    return best;
  }
  return std::get<ExplicitTable>(base_).values[s];
}

int RequirementFn::eval(VertexSet s) const {
  int value = base_eval(s);
  for (VertexSet mask : fixed_masks_)
    if (edge_crosses(mask, s, n_)) --value;
  return value;
}

RequirementFn RequirementFn::residual(const Hypergraph& ground,
                                      const std::vector<int>& fixed_ids) const {
  RequirementFn g = *this;
  for (int id : fixed_ids) g.fixed_masks_.push_back(ground.hyperedges.at(id).mask());
  return g;
}

const PairRequirements* RequirementFn::pairwise_reqs() const {
  const auto* pm = std::get_if<PairwiseMax>(&base_);
  return pm ? &pm->reqs : nullptr;
}

bool RequirementFn::is_trivial() const {
  if (const auto* pm = std::get_if<PairwiseMax>(&base_)) {
    if (pm->reqs.rmax() == 0) return true;
    if (fixed_masks_.empty()) return false;
    // f(S) <= |delta_fixed(S)| everywhere iff every pair's min cut over
    // the fixed multiset reaches its requirement.
    std::vector<WeightedElement> elements;
    elements.reserve(fixed_masks_.size());
    for (VertexSet mask : fixed_masks_) elements.push_back({mask, Rational(1)});
    for (const auto& [pair, r] : pm->reqs.pairs())
      if (min_cut_elements(n_, elements, pair.first, pair.second) < r) return false;
    return true;
  }
  VertexSet all = full_set(n_);
  for (VertexSet s = 1; s < all; ++s)
    if (eval(s) > 0) return false;
  return true;
}

namespace {

std::vector<int> tabulate(const RequirementFn& f) {
  if (f.ground_size() > 8) throw LimitError("exhaustive pair checks are capped at n <= 8");
  std::vector<int> table(std::size_t{1} << f.ground_size());
  for (VertexSet s = 0; s < table.size(); ++s) table[s] = f.eval(s);
  return table;
}

}  // namespace

std::optional<PairCounterexample> check_skew_supermodular(const RequirementFn& f) {
  const std::vector<int> table = tabulate(f);
  const VertexSet count = table.size();
  for (VertexSet a = 0; a < count; ++a) {
    for (VertexSet b = 0; b < count; ++b) {
      int lhs = table[a] + table[b];
      if (lhs <= table[a & b] + table[a | b]) continue;
      if (lhs <= table[a & ~b] + table[b & ~a]) continue;
      return PairCounterexample{a, b};
    }
  }
  return std::nullopt;
}

namespace {

std::optional<SubmodularCounterexample> check_table_properties(int n,
                                                               const std::vector<int>& h) {
  const VertexSet all = full_set(n);
  for (VertexSet a = 0; a <= all; ++a) {
    if (h[a] != h[all & ~a])
      return SubmodularCounterexample{SubmodularProperty::Symmetry, a, all & ~a};
  }
  for (VertexSet a = 0; a <= all; ++a) {
    for (VertexSet b = 0; b <= all; ++b) {
      if (h[a] + h[b] < h[a | b] + h[a & b])
        return SubmodularCounterexample{SubmodularProperty::Submodularity, a, b};
      if (h[a] + h[b] < h[a & ~b] + h[b & ~a])
        return SubmodularCounterexample{SubmodularProperty::PosiModularity, a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SubmodularCounterexample> check_symmetric_submodular(
    const Hypergraph& ground, const std::vector<int>& edge_subset) {
  if (ground.n > 8) throw LimitError("exhaustive pair checks are capped at n <= 8");
  std::vector<VertexSet> masks;
  masks.reserve(edge_subset.size());
  for (int id : edge_subset) masks.push_back(ground.hyperedges.at(id).mask());

  std::vector<int> h(std::size_t{1} << ground.n, 0);
  for (VertexSet s = 0; s < h.size(); ++s)
    for (VertexSet mask : masks)
      if (edge_crosses(mask, s, ground.n)) ++h[s];
  return check_table_properties(ground.n, h);
}

std::optional<SubmodularCounterexample> check_symmetric_submodular_table(
    int n, const std::vector<int>& values) {
  if (n > 8) throw LimitError("exhaustive pair checks are capped at n <= 8");
  if (values.size() != (std::size_t{1} << n))
    throw ValidationError("table must have 2^n entries");
  return check_table_properties(n, values);
}

}  // namespace sndp
