#include "sndp/requirement.hpp"

#include "sndp/errors.hpp"
#include "sndp/generate.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace sndp;
using namespace sndp::testing;

TEST_SUITE_BEGIN("requirement");

TEST_CASE("pairwise max splits pairs") {
  PairRequirements reqs;
  reqs.set(0, 1, 2);
  RequirementFn f = RequirementFn::pairwise_max(3, reqs);
  CHECK(f.eval(set_from_vector({0})) == 2);
  CHECK(f.eval(set_from_vector({2})) == 0);
  CHECK(f.eval(set_from_vector({0, 2})) == 2);
  CHECK(f.eval(0) == 0);
  CHECK(f.eval(full_set(3)) == 0);
}

TEST_CASE("residual subtracts the fixed crossing count") {
  PairRequirements reqs;
  reqs.set(0, 1, 2);
  RequirementFn f = RequirementFn::pairwise_max(3, reqs);

  Graph g = make_graph(3, {{0, 1, 1}});
  RequirementFn res = f.residual(as_hypergraph(g), {0});
  CHECK(res.eval(set_from_vector({0})) == 1);

  // empty fixed set leaves f untouched
  RequirementFn same = f.residual(as_hypergraph(g), {});
  for (VertexSet s = 0; s <= full_set(3); ++s) CHECK(same.eval(s) == f.eval(s));
}

TEST_CASE("residual of a full cycle drops singletons by two") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, all_pairs_r(4, 3));
  RequirementFn res = f.residual(as_hypergraph(square.graph), {0, 1, 2, 3});
  for (int v = 0; v < 4; ++v) CHECK(res.eval(set_from_vector({v})) == 3 - 2);
}

TEST_CASE("residual layers normalize into one multiset") {
  EcInstance square = square_unit();
  Hypergraph ground = as_hypergraph(square.graph);
  RequirementFn f = RequirementFn::pairwise_max(4, all_pairs_r(4, 3));
  RequirementFn nested = f.residual(ground, {0}).residual(ground, {1}).residual(ground, {2});
  RequirementFn flat = f.residual(ground, {0, 1, 2});
  CHECK(nested.fixed_masks().size() == 3);
  for (VertexSet s = 0; s <= full_set(4); ++s) CHECK(nested.eval(s) == flat.eval(s));
}

TEST_CASE("pairwise max functions are skew-supermodular") {
  SeededRng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    PairRequirements reqs;
    int pairs = rng.next_in(1, 5);
    for (int i = 0; i < pairs; ++i) {
      int u = rng.next_in(0, 5), v = rng.next_in(0, 5);
      if (u != v) reqs.set(u, v, rng.next_in(1, 3));
    }
    CHECK(!check_skew_supermodular(RequirementFn::pairwise_max(6, reqs)).has_value());
  }
}

TEST_CASE("a constructed table fails the skew check") {
  // f({0,1}) = f({1,2}) = 1, zero elsewhere: the pair A = {0,1},
  // B = {1,2} beats both branches.
  std::vector<int> table(8, 0);
  table[set_from_vector({0, 1})] = 1;
  table[set_from_vector({1, 2})] = 1;
  RequirementFn f = RequirementFn::explicit_table(3, table);
  auto cex = check_skew_supermodular(f);
  REQUIRE(cex.has_value());
  // confirm the counterexample by hand
  int lhs = f.eval(cex->a) + f.eval(cex->b);
  CHECK(lhs > f.eval(cex->a & cex->b) + f.eval(cex->a | cex->b));
  CHECK(lhs > f.eval(cex->a & ~cex->b) + f.eval(cex->b & ~cex->a));
}

TEST_CASE("residuals preserve skew-supermodularity (graph and hypergraph)") {
  SeededRng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.next_in(4, 6);
    PairRequirements reqs;
    int pairs = rng.next_in(1, 4);
    for (int i = 0; i < pairs; ++i) {
      int u = rng.next_in(0, n - 1), v = rng.next_in(0, n - 1);
      if (u != v) reqs.set(u, v, rng.next_in(1, 3));
    }
    RequirementFn f = RequirementFn::pairwise_max(n, reqs);

    Hypergraph ground;
    ground.n = n;
    int edges = rng.next_in(1, 5);
    for (int i = 0; i < edges; ++i) {
      int size = rng.next_in(2, std::min(4, n));
      std::vector<int> pool(n);
      for (int j = 0; j < n; ++j) pool[j] = j;
      for (int j = n - 1; j > 0; --j)
        std::swap(pool[j], pool[rng.next_below(static_cast<std::uint64_t>(j + 1))]);
      pool.resize(size);
      std::sort(pool.begin(), pool.end());
      ground.hyperedges.push_back({pool, Rational(1)});
    }
    std::vector<int> fixed;
    for (int id = 0; id < ground.edge_count(); ++id)
      if (rng.next_below(2)) fixed.push_back(id);

    CHECK(!check_skew_supermodular(f.residual(ground, fixed)).has_value());
  }
}

TEST_CASE("cut capacity is symmetric, submodular, posi-modular") {
  Graph triangle = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(!check_symmetric_submodular(as_hypergraph(triangle), {0, 1, 2}).has_value());

  Hypergraph h;
  h.n = 4;
  h.hyperedges.push_back({{0, 1, 2}, Rational(1)});
  CHECK(!check_symmetric_submodular(h, {0}).has_value());
}

TEST_CASE("an asymmetric table is caught") {
  std::vector<int> table(8, 0);
  table[set_from_vector({0})] = 5;  // h({0}) != h({1,2})
  auto cex = check_symmetric_submodular_table(3, table);
  REQUIRE(cex.has_value());
  CHECK(cex->property == SubmodularProperty::Symmetry);
}

TEST_CASE("is_trivial") {
  CHECK(RequirementFn::pairwise_max(4, {}).is_trivial());

  PairRequirements one;
  one.set(0, 1, 1);
  CHECK(!RequirementFn::pairwise_max(4, one).is_trivial());

  // rmax = 3 but a fixed set that meets every requirement: compare with
  // exhaustive enumeration of the residual
  EcInstance square = square_unit();
  Hypergraph ground = as_hypergraph(square.graph);
  PairRequirements reqs = all_pairs_r(4, 2);
  RequirementFn res =
      RequirementFn::pairwise_max(4, reqs).residual(ground, {0, 1, 2, 3});
  bool enumerated_trivial = true;
  for (VertexSet s = 1; s < full_set(4); ++s)
    if (res.eval(s) > 0) enumerated_trivial = false;
  CHECK(res.is_trivial() == enumerated_trivial);
  CHECK(res.is_trivial());

  RequirementFn res3 =
      RequirementFn::pairwise_max(4, all_pairs_r(4, 3)).residual(ground, {0, 1, 2, 3});
  CHECK(!res3.is_trivial());
}

TEST_CASE("pairwise symmetry f(S) == f(V-S)") {
  PairRequirements reqs;
  reqs.set(0, 3, 2);
  reqs.set(1, 4, 1);
  RequirementFn f = RequirementFn::pairwise_max(5, reqs);
  for (VertexSet s = 0; s <= full_set(5); ++s)
    CHECK(f.eval(s) == f.eval(full_set(5) & ~s));
}

TEST_CASE("size limits are enforced") {
  CHECK_THROWS_AS(RequirementFn::explicit_table(17, {}), LimitError);
  CHECK_THROWS_AS(check_skew_supermodular(RequirementFn::pairwise_max(9, {})), LimitError);
}

TEST_SUITE_END();
