#pragma once

#include "sndp/generate.hpp"
#include "sndp/instance.hpp"

#include <tuple>
#include <vector>

namespace sndp::testing {

inline Graph make_graph(int n, const std::vector<std::tuple<int, int, long>>& edges) {
  Graph g;
  g.n = n;
  for (auto [u, v, c] : edges) g.edges.push_back({u, v, Rational(c)});
  return g;
}

inline PairRequirements all_pairs_r(int n, int r) {
  PairRequirements reqs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) reqs.set(u, v, r);
  return reqs;
}

// Unit-cost triangle, r = 1 on every pair. LP optimum is x = 1/2.
inline EcInstance triangle_unit() {
  EcInstance inst;
  inst.graph = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  inst.requirements = all_pairs_r(3, 1);
  return inst;
}

// Unit-cost 4-cycle 0-1-2-3-0, r = 1 on every pair.
inline EcInstance square_unit() {
  EcInstance inst;
  inst.graph = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  inst.requirements = all_pairs_r(4, 1);
  return inst;
}

// Non-terminal center 3 joined to terminals 0, 1, 2; unit costs, r = 1 on
// all terminal pairs.
inline ElemInstance star_elem() {
  ElemInstance inst;
  inst.graph = make_graph(4, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}});
  inst.terminals = {0, 1, 2};
  inst.requirements = all_pairs_r(3, 1);
  return inst;
}

inline std::vector<int> iota_ids(int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  return ids;
}

}  // namespace sndp::testing
