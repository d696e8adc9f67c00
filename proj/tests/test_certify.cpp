#include "sndp/certify.hpp"

#include "sndp/errors.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace sndp;
using namespace sndp::testing;

namespace {

VertexSolution all_half(int edges) {
  VertexSolution sol;
  for (int id = 0; id < edges; ++id) sol.x[id] = make_rational(1, 2);
  return sol;
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("triangle family is the three singletons") {
  EcInstance tri = triangle_unit();
  RequirementFn f = RequirementFn::pairwise_max(3, tri.requirements);
  VertexSolution sol = all_half(3);

  LaminarExtraction ex = extract_laminar_basis(sol, f, tri.graph, iota_ids(3));
  REQUIRE(ex.ok);
  CHECK(ex.rank == 3);
  REQUIRE(ex.family.nodes.size() == 3);
  for (const auto& node : ex.family.nodes) {
    CHECK(set_size(node.set) == 1);
    CHECK(node.f_value == 1);
  }
  CHECK(ex.family.roots.size() == 3);
  CHECK(ex.family.laminar());
}

TEST_CASE("4-cycle family needs a two-element set") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution sol = all_half(4);

  LaminarExtraction ex = extract_laminar_basis(sol, f, square.graph, iota_ids(4));
  REQUIRE(ex.ok);
  CHECK(ex.rank == 4);
  REQUIRE(ex.family.nodes.size() == 4);
  int pairs = 0;
  for (const auto& node : ex.family.nodes)
    if (set_size(node.set) == 2) ++pairs;
  CHECK(pairs == 1);
}

TEST_CASE("extraction requires a fully fractional solution") {
  Graph g = make_graph(2, {{0, 1, 1}});
  PairRequirements reqs;
  reqs.set(0, 1, 1);
  RequirementFn f = RequirementFn::pairwise_max(2, reqs);
  VertexSolution forced;
  forced.x[0] = Rational(1);
  CHECK_THROWS_AS(extract_laminar_basis(forced, f, g, iota_ids(1)), ValidationError);
}

TEST_CASE("half-edge check") {
  VertexSolution sol = all_half(3);
  HalfEdgeResult r = check_half_edge(sol);
  CHECK(r.ok);
  CHECK(r.max_coordinate == make_rational(1, 2));

  VertexSolution thirds;
  for (int id = 0; id < 3; ++id) thirds.x[id] = make_rational(1, 3);
  CHECK(!check_half_edge(thirds).ok);
}

TEST_CASE("a synthetic all-thirds point is not a vertex") {
  // x = 1/3 on the triangle: feasible for the singleton cuts but not a
  // vertex; extraction finds no spanning tight family.
  EcInstance tri = triangle_unit();
  RequirementFn f = RequirementFn::pairwise_max(3, tri.requirements);
  VertexSolution thirds;
  for (int id = 0; id < 3; ++id) thirds.x[id] = make_rational(1, 3);
  LaminarExtraction ex = extract_laminar_basis(thirds, f, tri.graph, iota_ids(3));
  CHECK(!ex.ok);
  CHECK(ex.failure.find("not a vertex") != std::string::npos);
}

TEST_CASE("counting identities hold on extracted families") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution sol = all_half(4);
  LaminarExtraction ex = extract_laminar_basis(sol, f, square.graph, iota_ids(4));
  REQUIRE(ex.ok);

  IdentityReport report = check_counting_identity(ex.family, sol, square.graph, iota_ids(4));
  CHECK(report.eq_tightness);
  CHECK(report.beta_recursion);
  CHECK(report.alpha_root_sum);
}

TEST_CASE("leaf-only families pass vacuously with the root alpha sum") {
  EcInstance tri = triangle_unit();
  RequirementFn f = RequirementFn::pairwise_max(3, tri.requirements);
  VertexSolution sol = all_half(3);
  LaminarExtraction ex = extract_laminar_basis(sol, f, tri.graph, iota_ids(3));
  REQUIRE(ex.ok);
  IdentityReport report = check_counting_identity(ex.family, sol, tri.graph, iota_ids(3));
  CHECK(report.all_ok());
}

TEST_CASE("a misclassified edge breaks the identity arithmetic") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution sol = all_half(4);
  LaminarExtraction ex = extract_laminar_basis(sol, f, square.graph, iota_ids(4));
  REQUIRE(ex.ok);

  int internal = -1;
  for (int i = 0; i < static_cast<int>(ex.family.nodes.size()); ++i)
    if (!ex.family.nodes[i].children.empty()) internal = i;
  REQUIRE(internal >= 0);

  std::vector<VertexSet> children;
  for (int child : ex.family.nodes[internal].children)
    children.push_back(ex.family.nodes[child].set);
  EdgePartition good =
      classify_edges(square.graph, iota_ids(4), ex.family.nodes[internal].set, children);
  auto [lhs, rhs] = counting_identity_sides(ex.family, internal, good, sol);
  CHECK(lhs == rhs);

  // move one co edge into po: the right side drops by x_e
  REQUIRE(!good.co.empty());
  EdgePartition bad = good;
  bad.po.push_back(bad.co.back());
  bad.co.pop_back();
  auto [lhs2, rhs2] = counting_identity_sides(ex.family, internal, bad, sol);
  CHECK(lhs2 != rhs2);
}

TEST_CASE("unique child demands two endpoints in the ring") {
  // Family {C={0}, S={0,1}} with delta(S) == delta(C): cannot come from
  // an extraction (dependent rows); injected directly it must fail.
  Graph g = make_graph(3, {{0, 2, 1}, {0, 2, 1}});
  LaminarFamily family = build_forest({{set_from_vector({0}), 1},
                                       {set_from_vector({0, 1}), 1}});
  UniqueChildResult r = check_unique_child(family, g, iota_ids(2));
  CHECK(!r.ok);
  CHECK(r.failing_set == set_from_vector({0, 1}));

  // with an edge touching the ring vertex twice it passes
  Graph g2 = make_graph(3, {{0, 2, 1}, {1, 2, 1}, {1, 0, 1}});
  UniqueChildResult r2 = check_unique_child(family, g2, iota_ids(3));
  CHECK(r2.ok);

  // a forest with no unique-child sets passes vacuously
  LaminarFamily leaves = build_forest({{set_from_vector({0}), 1}, {set_from_vector({1}), 1}});
  CHECK(check_unique_child(leaves, g, iota_ids(2)).ok);
}

TEST_CASE("corpus-extracted families pass unique child") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution sol = all_half(4);
  LaminarExtraction ex = extract_laminar_basis(sol, f, square.graph, iota_ids(4));
  REQUIRE(ex.ok);
  CHECK(check_unique_child(ex.family, square.graph, iota_ids(4)).ok);
}

TEST_CASE("claim table: leaves satisfy, the 4-cycle pair set does not") {
  EcInstance tri = triangle_unit();
  RequirementFn ftri = RequirementFn::pairwise_max(3, tri.requirements);
  VertexSolution half3 = all_half(3);
  LaminarExtraction extri = extract_laminar_basis(half3, ftri, tri.graph, iota_ids(3));
  REQUIRE(extri.ok);
  for (const ClaimRow& row : claim_report(extri.family, tri.graph, iota_ids(3))) {
    CHECK(row.f_value == 1);
    CHECK(row.alpha == 1);
    CHECK(row.beta == 0);
    CHECK(row.satisfied);
  }

  EcInstance square = square_unit();
  RequirementFn fsq = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution half4 = all_half(4);
  LaminarExtraction exsq = extract_laminar_basis(half4, fsq, square.graph, iota_ids(4));
  REQUIRE(exsq.ok);
  bool found_unsatisfied = false;
  for (const ClaimRow& row : claim_report(exsq.family, square.graph, iota_ids(4))) {
    if (set_size(row.set) == 2) {
      // f = 1, alpha = 3, beta = 1: the claim hypothesis max x < 1/2 is
      // exactly what fails at this max = 1/2 vertex
      CHECK(row.f_value == 1);
      CHECK(row.alpha == 3);
      CHECK(row.beta == 1);
      CHECK(!row.satisfied);
      found_unsatisfied = true;
    } else {
      CHECK(row.satisfied);
    }
  }
  CHECK(found_unsatisfied);
}

TEST_CASE("certify_fractional_vertex aggregates everything") {
  EcInstance square = square_unit();
  RequirementFn f = RequirementFn::pairwise_max(4, square.requirements);
  VertexSolution sol = all_half(4);
  VertexCertification cert = certify_fractional_vertex(sol, f, square.graph, iota_ids(4));
  CHECK(cert.all_ok());
  CHECK(cert.laminar_size == 4);
  CHECK(cert.laminar_rank == 4);
  nlohmann::json j = cert.to_json();
  CHECK(j["vertex_ok"] == true);
  CHECK(j["half_edge"]["max"] == "1/2");
  CHECK(j["identities"]["eq3"] == true);
}

TEST_SUITE_END();
