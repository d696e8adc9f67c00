#pragma once

// Internal rational linear algebra used by the LP certifier, the laminar
// extraction and the vertex enumerator. Not installed.

#include "sndp/rational.hpp"

#include <optional>
#include <vector>

namespace sndp::detail {

// Incremental row space over the rationals, kept in reduced echelon form.
class RankTracker {
 public:
  explicit RankTracker(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool in_span(std::vector<Rational> v) const {
    reduce(v);
    for (const Rational& c : v)
      if (c != 0) return false;
    return true;
  }

  // Adds v to the space; returns false (and leaves the space unchanged)
  // if v was already in the span.
  bool add_if_independent(std::vector<Rational> v) {
    reduce(v);
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    Rational inv = v[lead];
    for (int j = 0; j < cols_; ++j) v[j] /= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational factor = rows_[r][lead];
      if (factor != 0)
        for (int j = 0; j < cols_; ++j) rows_[r][j] -= factor * v[j];
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

 private:
  void reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational factor = v[lead_[r]];
      if (factor != 0)
        for (int j = 0; j < cols_; ++j) v[j] -= factor * rows_[r][j];
    }
  }

  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> lead_;
};

// Solves a square system by Gauss-Jordan elimination; nullopt when the
// matrix is singular.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    Rational inv = m[col][col];
    for (int j = col; j < n; ++j) m[col][j] /= inv;
    rhs[col] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational factor = m[r][col];
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace sndp::detail
