#include "sndp/instance.hpp"

#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"
#include "sndp/generate.hpp"
#include "sndp/io.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <string>

using namespace sndp;
using namespace sndp::testing;

TEST_SUITE_BEGIN("instance");

TEST_CASE("parse maps a 4-cycle with unit costs directly") {
  const std::string text = R"({
    "kind": "ec", "n": 4,
    "edges": [{"u":0,"v":1,"cost":1},{"u":1,"v":2,"cost":1},
              {"u":2,"v":3,"cost":1},{"u":3,"v":0,"cost":1}],
    "requirements": [{"u":0,"v":1,"r":1},{"u":0,"v":2,"r":1},{"u":0,"v":3,"r":1},
                     {"u":1,"v":2,"r":1},{"u":1,"v":3,"r":1},{"u":2,"v":3,"r":1}]
  })";
  Instance inst = parse_instance(text);
  const auto& ec = std::get<EcInstance>(inst);
  CHECK(ec.graph.n == 4);
  CHECK(ec.graph.edge_count() == 4);
  CHECK(ec.requirements.pairs().size() == 6);
  CHECK(ec.requirements.get(2, 0) == 1);
}

TEST_CASE("parse keeps zero-cost hyperedges") {
  const std::string text = R"({
    "kind": "hyper", "n": 3,
    "hyperedges": [{"vertices":[0,1,2],"cost":0}],
    "requirements": [{"u":0,"v":1,"r":1}]
  })";
  HyperInstance h = std::get<HyperInstance>(parse_instance(text));
  CHECK(h.hyper.hyperedges[0].size() == 3);
  CHECK(h.hyper.hyperedges[0].cost == 0);
}

TEST_CASE("parse reports the field path of a negative cost") {
  const std::string text = R"({
    "kind": "ec", "n": 2,
    "edges": [{"u":0,"v":1,"cost":"-1"}],
    "requirements": []
  })";
  CHECK_THROWS_WITH_AS(parse_instance(text),
                       doctest::Contains("negative cost at edges[0].cost"), ValidationError);
}

TEST_CASE("parse rejects schema violations with paths") {
  CHECK_THROWS_AS(parse_instance("{"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"kind":"??"})"), doctest::Contains("unknown kind"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_instance(
          R"({"kind":"hyper","n":3,"hyperedges":[{"vertices":[0],"cost":1}],"requirements":[]})"),
      doctest::Contains("size < 2"), ValidationError);
  // requirement on a non-terminal
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"kind":"elem","n":3,
        "edges":[{"u":0,"v":1,"cost":1}],
        "terminals":[0,1],
        "requirements":[{"u":0,"v":2,"r":1}]})"),
      doctest::Contains("non-terminal"), ValidationError);
  // weight on a terminal
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"kind":"elem","n":3,
        "edges":[{"u":0,"v":1,"cost":1}],
        "terminals":[0,1],
        "node_weights":{"0":3},
        "requirements":[{"u":0,"v":1,"r":1}]})"),
      doctest::Contains("weight on a terminal"), ValidationError);
}

TEST_CASE("serialize then parse is the identity") {
  Instance variants[] = {
      Instance(triangle_unit()),
      Instance(star_elem()),
  };
  for (const Instance& inst : variants) {
    Instance reparsed = parse_instance(serialize_instance(inst));
    CHECK(inst == reparsed);
    // and serialization is stable
    CHECK(serialize_instance(inst) == serialize_instance(reparsed));
  }
}

TEST_CASE("serialize emits lowest terms") {
  EcInstance inst;
  inst.graph.n = 2;
  inst.graph.edges.push_back({0, 1, make_rational(3, 2)});
  inst.requirements.set(0, 1, 1);
  std::string text = serialize_instance(Instance(inst));
  CHECK(text.find("\"3/2\"") != std::string::npos);

  inst.graph.edges[0].cost = make_rational(4, 2);
  text = serialize_instance(Instance(inst));
  CHECK(text.find("\"cost\": 2") != std::string::npos);
}

TEST_CASE("generation is deterministic per seed") {
  GenParams params;
  params.kind = InstanceKind::Ec;
  params.n = 6;
  params.count = 10;
  params.rmax = 2;
  params.seed = 42;
  Instance a = generate(params);
  Instance b = generate(params);
  CHECK(serialize_instance(a) == serialize_instance(b));

  params.seed = 43;
  CHECK(serialize_instance(a) != serialize_instance(generate(params)));
}

TEST_CASE("generated ec instances are feasible by max-flow") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenParams params;
    params.kind = InstanceKind::Ec;
    params.n = 6;
    params.count = 10;
    params.rmax = 3;
    params.seed = seed;
    EcInstance inst = std::get<EcInstance>(generate(params));
    for (const auto& [pair, r] : inst.requirements.pairs())
      CHECK(edge_connectivity(inst.graph, iota_ids(inst.graph.edge_count()), pair.first,
                              pair.second) >= r);
  }
}

TEST_CASE("generated hyperedges respect the degree bound") {
  GenParams params;
  params.kind = InstanceKind::Hyper;
  params.n = 5;
  params.count = 4;
  params.max_degree = 3;
  params.rmax = 1;
  params.pair_count = 1;
  params.seed = 7;
  HyperInstance inst = std::get<HyperInstance>(generate(params));
  CHECK(inst.hyper.edge_count() == 4);
  for (const Hyperedge& e : inst.hyper.hyperedges) {
    CHECK(e.size() >= 2);
    CHECK(e.size() <= 3);
  }
}

TEST_CASE("generator rejects impossible budgets") {
  GenParams params;
  params.kind = InstanceKind::Ec;
  params.n = 6;
  params.count = 1;  // cannot even hold the planted path
  params.rmax = 2;
  params.pair_count = 3;
  params.seed = 1;
  CHECK_THROWS_AS(generate(params), ValidationError);
}

TEST_CASE("dplus ignores zero-cost hyperedges") {
  Hypergraph h;
  h.n = 4;
  h.hyperedges.push_back({{0, 1, 2}, Rational(0)});
  h.hyperedges.push_back({{0, 1}, Rational(5)});
  CHECK(dplus(h) == 2);

  h.hyperedges[1].cost = 0;
  CHECK(dplus(h) == 0);

  Hypergraph single;
  single.n = 4;
  single.hyperedges.push_back({{0, 1, 2, 3}, Rational(1)});
  CHECK(dplus(single) == 4);
}

TEST_SUITE_END();
