// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit if anything fails.

#include "sndp/certify.hpp"
#include "sndp/connectivity.hpp"
#include "sndp/errors.hpp"
#include "sndp/generate.hpp"
#include "sndp/io.hpp"
#include "sndp/oracle.hpp"
#include "sndp/reductions.hpp"
#include "sndp/rounding.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace sndp;

namespace {

struct CorpusRun {
  GenParams params;
  EcInstance instance;
  SolveResult result;
};

struct ElemRun {
  ElemInstance instance;
  SolveResult result;
};

// The generated EC corpus: five parameter profiles per seed 1..100, all
// within n <= 10, m <= 20, rmax <= 3, integer costs 1..10. The dense
// rmax = 3 profiles keep the LP vertices fractional so the half-edge and
// laminar criteria see a large vertex sample.
GenParams corpus_params(std::uint64_t seed, int variant) {
  const int s = static_cast<int>(seed);
  GenParams params;
  params.kind = InstanceKind::Ec;
  params.cost_lo = 1;
  params.cost_hi = 10;
  params.seed = seed;
  switch (variant) {
    case 0:  // mixed sparse profile
      params.n = 5 + s % 6;
      params.rmax = 1 + s % 3;
      params.pair_count = 2 + s % 2;
      params.count = 8 + s % 13;
      break;
    case 1:  // dense requirements, high connectivity
      params.n = 5 + s % 5;
      params.rmax = 3;
      params.pair_count = params.n * (params.n - 1) / 2;
      params.count = params.n + 4 + s % 6;
      break;
    case 2:  // dense requirements, narrow costs
      params.n = 6 + s % 5;
      params.rmax = 3;
      params.pair_count = params.n * (params.n - 1) / 2;
      params.count = params.n + 3 + s % 7;
      params.cost_hi = 3;
      break;
    case 3:  // near-unit costs
      params.n = 5 + s % 6;
      params.rmax = 3;
      params.pair_count = params.n;
      params.count = 12 + s % 9;
      params.cost_hi = 2;
      break;
    default:  // requirement-2 profile
      params.n = 6 + s % 5;
      params.rmax = 2 + s % 2;
      params.pair_count = params.n;
      params.count = 10 + s % 11;
      break;
  }
  int worst_plant = ((params.rmax + 1) / 2) * std::min(2 * params.pair_count, params.n);
  params.count = std::min(20, std::max(params.count, worst_plant));
  return params;
}

std::vector<CorpusRun>& ec_corpus() {
  static std::vector<CorpusRun> corpus = [] {
    std::vector<CorpusRun> runs;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      for (int variant = 0; variant < 5; ++variant) {
        CorpusRun run;
        run.params = corpus_params(seed, variant);
        run.instance = std::get<EcInstance>(generate(run.params));
        JainOptions options;
        options.certify_vertices = true;
        options.label =
            "corpus seed " + std::to_string(seed) + " variant " + std::to_string(variant);
        run.result = solve_ecsndp(run.instance, options);
        runs.push_back(std::move(run));
      }
    }
    return runs;
  }();
  return corpus;
}

std::vector<ElemRun>& elem_corpus() {
  static std::vector<ElemRun> corpus = [] {
    std::vector<ElemRun> runs;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      GenParams params;
      params.kind = InstanceKind::Elem;
      params.n = 5 + static_cast<int>(seed % 4);       // 5..8
      params.count = 7 + static_cast<int>(seed % 6);   // 7..12 edges
      params.rmax = 1 + static_cast<int>(seed % 2);    // 1..2
      params.pair_count = 2;
      params.terminal_count = std::max(3, params.n / 2);
      params.cost_lo = 1;
      params.cost_hi = 10;
      params.seed = 7000 + seed;
      ElemRun run;
      run.instance = std::get<ElemInstance>(generate(params));
      JainOptions options;
      options.certify_vertices = true;
      options.label = "elem corpus seed " + std::to_string(seed);
      run.result = solve_elemsndp(run.instance, options);
      runs.push_back(std::move(run));
    }
    return runs;
  }();
  return corpus;
}

bool criterion1(std::string& detail) {
  int checked = 0;
  for (const CorpusRun& run : ec_corpus()) {
    if (run.result.trace.iterations.empty()) continue;
    if (run.result.total_cost > 2 * run.result.trace.initial_lp_value) {
      detail = "seed " + std::to_string(run.params.seed) + " broke the 2x bound";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(ec_corpus().size()) + " instances (5 profiles x seeds 1-100), " +
           std::to_string(checked) + " nontrivial, all cost <= 2 * LP exactly";
  return ec_corpus().size() >= 100;
}

bool criterion2(std::string& detail) {
  int checked = 0;
  for (const CorpusRun& run : ec_corpus()) {
    if (run.instance.graph.edge_count() > 14) continue;
    BruteForceResult opt = brute_force_opt(Instance(run.instance));
    if (!(opt.cost <= run.result.total_cost && run.result.total_cost <= 2 * opt.cost)) {
      detail = "seed " + std::to_string(run.params.seed) + " broke the OPT sandwich";
      return false;
    }
    // independent feasibility check of the output by max-flow per pair
    for (const auto& [pair, r] : run.instance.requirements.pairs())
      if (edge_connectivity(run.instance.graph, run.result.solution, pair.first, pair.second) <
          r) {
        detail = "seed " + std::to_string(run.params.seed) + " output infeasible";
        return false;
      }
    ++checked;
  }
  detail = std::to_string(checked) + " instances with <= 14 edges sandwiched exactly";
  return checked > 0;
}

bool criterion3(std::string& detail) {
  int vertices = 0;
  Rational half = make_rational(1, 2);
  auto scan = [&](const RoundingTrace& trace, const std::string& label) -> bool {
    for (const IterationRecord& it : trace.iterations) {
      if (!it.certification) continue;
      ++vertices;
      if (!it.certification->half_edge.ok) {
        detail = label + ": fully fractional vertex below 1/2";
        return false;
      }
    }
    return true;
  };
  for (const CorpusRun& run : ec_corpus())
    if (!scan(run.result.trace, "seed " + std::to_string(run.params.seed))) return false;
  for (const ElemRun& run : elem_corpus())
    if (!scan(run.result.trace, "elem corpus")) return false;

  // tightness witnesses: the fractional triangle and 4-cycle sit at 1/2
  EcInstance triangle;
  triangle.graph.n = 3;
  triangle.graph.edges = {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}};
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) triangle.requirements.set(u, v, 1);
  SolveResult tri = solve_ecsndp(triangle);
  ++vertices;
  if (tri.trace.iterations.at(0).max_coordinate != half) {
    detail = "triangle witness is not exactly 1/2";
    return false;
  }

  EcInstance square;
  square.graph.n = 4;
  square.graph.edges = {{0, 1, Rational(1)},
                        {1, 2, Rational(1)},
                        {2, 3, Rational(1)},
                        {3, 0, Rational(1)}};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) square.requirements.set(u, v, 1);
  SolveResult sq = solve_ecsndp(square);
  ++vertices;
  if (sq.trace.iterations.at(0).max_coordinate != half) {
    detail = "4-cycle witness is not exactly 1/2";
    return false;
  }

  detail = std::to_string(vertices) + " certified fully fractional vertices, all >= 1/2; "
           "triangle and 4-cycle hit 1/2 exactly";
  return vertices >= 300;
}

bool criterion4(std::string& detail) {
  int families = 0;
  auto scan = [&](const RoundingTrace& trace, const std::string& label) -> bool {
    for (const IterationRecord& it : trace.iterations) {
      if (!it.certification) continue;
      const VertexCertification& cert = *it.certification;
      int fractional = 0;
      for (const auto& [id, value] : it.vertex.x)
        if (value > 0 && value < 1) ++fractional;
      if (!cert.vertex_ok || cert.laminar_size != fractional ||
          cert.laminar_rank != fractional) {
        detail = label + ": laminar extraction failed (" + cert.failure + ")";
        return false;
      }
      if (!cert.identities.all_ok()) {
        detail = label + ": counting identity failed (" + cert.identities.detail + ")";
        return false;
      }
      if (!cert.unique_child_ok) {
        detail = label + ": unique-child check failed";
        return false;
      }
      ++families;
    }
    return true;
  };
  for (const CorpusRun& run : ec_corpus())
    if (!scan(run.result.trace, "seed " + std::to_string(run.params.seed))) return false;
  for (const ElemRun& run : elem_corpus())
    if (!scan(run.result.trace, "elem corpus")) return false;
  detail = std::to_string(families) +
           " extracted families: |L| = fractional edges, full rank, Eq3 + beta + alpha-root + "
           "unique-child all hold";
  return families > 0;
}

bool criterion5(std::string& detail) {
  SeededRng rng(515151);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.next_in(4, 8);
    PairRequirements reqs;
    int pairs = rng.next_in(1, 4);
    for (int i = 0; i < pairs; ++i) {
      int u = rng.next_in(0, n - 1), v = rng.next_in(0, n - 1);
      if (u != v) reqs.set(u, v, rng.next_in(1, 3));
    }
    RequirementFn f = RequirementFn::pairwise_max(n, reqs);

    // alternate graph and hypergraph fixed sets
    Hypergraph ground;
    ground.n = n;
    int edges = rng.next_in(1, 6);
    for (int i = 0; i < edges; ++i) {
      int size = (trial % 2 == 0) ? 2 : rng.next_in(2, std::min(4, n));
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

    if (check_skew_supermodular(f.residual(ground, fixed))) {
      detail = "residual skew-supermodularity failed at trial " + std::to_string(trial);
      return false;
    }
    if (check_symmetric_submodular(ground, fixed)) {
      detail = "cut function property failed at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "50 random (f, F) pairs (graphs and hypergraphs, n <= 8): 4^n checks all pass";
  return true;
}

bool criterion6(std::string& detail) {
  SeededRng rng(616161);
  for (int trial = 0; trial < 50; ++trial) {
    GenParams params;
    params.kind = InstanceKind::Hyper;
    params.n = rng.next_in(4, 8);
    params.count = rng.next_in(3, 6);
    params.max_degree = 4;
    params.rmax = 1;
    params.pair_count = 1;
    params.seed = 60000 + trial;
    HyperInstance inst = std::get<HyperInstance>(generate(params));
    HyperToNwElemResult bip = hyper_to_nw_elem(inst);

    for (int round = 0; round < 20; ++round) {
      std::vector<int> sub;
      for (int id = 0; id < inst.hyper.edge_count(); ++id)
        if (rng.next_below(2)) sub.push_back(id);
      std::vector<int> bip_edges;
      for (int id = 0; id < bip.instance.graph.edge_count(); ++id) {
        int z = std::max(bip.instance.graph.edges[id].u, bip.instance.graph.edges[id].v);
        if (std::find(sub.begin(), sub.end(), z - inst.hyper.n) != sub.end())
          bip_edges.push_back(id);
      }
      for (int u = 0; u < inst.hyper.n; ++u) {
        for (int v = u + 1; v < inst.hyper.n; ++v) {
          // brute-force the hypergraph cut; flow the bipartite element cut
          int brute = -1;
          for (VertexSet s = 0; s <= full_set(inst.hyper.n); ++s) {
            if (!contains(s, u) || contains(s, v)) continue;
            int crossing = 0;
            for (int id : sub)
              if (edge_crosses(inst.hyper.hyperedges[id].mask(), s, inst.hyper.n)) ++crossing;
            if (brute < 0 || crossing < brute) brute = crossing;
          }
          int element = element_connectivity(bip.instance, bip_edges, u, v);
          if (brute != element) {
            detail = "trial " + std::to_string(trial) + " pair (" + std::to_string(u) + "," +
                     std::to_string(v) + "): hyper cut " + std::to_string(brute) +
                     " != element connectivity " + std::to_string(element);
            return false;
          }
        }
      }
    }
  }

  // composition: solve_elemsndp == solve_hypersndp after elem_to_hyper
  for (const ElemRun& run : elem_corpus()) {
    ElemToHyperResult reduction = elem_to_hyper(run.instance);
    SolveResult via_hyper = solve_hypersndp(reduction.instance);
    std::vector<int> mapped;
    for (int id : via_hyper.solution)
      if (id < run.instance.graph.edge_count()) mapped.push_back(id);
    if (mapped != run.result.solution) {
      detail = "pipeline composition mismatch on an elem corpus instance";
      return false;
    }
  }
  detail = "50 hypergraphs x 20 sub-collections x all pairs: cut = element connectivity "
           "exactly; elem pipeline composition identical";
  return true;
}

bool criterion7(std::string& detail) {
  int checked = 0;
  for (const ElemRun& run : elem_corpus()) {
    if (run.instance.graph.edge_count() > 12) continue;
    BruteForceResult opt = brute_force_opt(Instance(run.instance));
    if (run.result.total_cost > 2 * opt.cost) {
      detail = "elem 2-approximation failed against brute force";
      return false;
    }
    for (const auto& [pair, r] : run.instance.requirements.pairs())
      if (element_connectivity(run.instance, run.result.solution, pair.first, pair.second) < r) {
        detail = "elem output infeasible by split-graph flow";
        return false;
      }
    ++checked;
  }
  detail = std::to_string(checked) + " elem instances: cost <= 2 * elem OPT, outputs verified "
           "by split-graph flows";
  return checked > 0;
}

bool criterion8(std::string& detail) {
  ExplorationSummary d2 = explore_problem1(2, 200, 20260810);
  if (!d2.candidates.empty()) {
    detail = "d = 2 produced flags";
    return false;
  }
  if (d2.min_max_coordinate && *d2.min_max_coordinate < make_rational(1, 2)) {
    detail = "d = 2 minimum max-coordinate below 1/2";
    return false;
  }

  ExplorationSummary d3 = explore_problem1(3, 200, 30260810);
  int buckets = 0;
  for (int count : d3.histogram) buckets += count;
  if (buckets != d3.fractional_vertices) {
    detail = "d = 3 histogram does not cover its vertices";
    return false;
  }
  std::ostringstream hist;
  for (int k = 0; k < 20; ++k)
    if (d3.histogram[k] > 0) hist << " [" << k << "/20:" << d3.histogram[k] << "]";
  detail = "d=2: " + std::to_string(d2.fractional_vertices) +
           " vertices, zero flags; d=3: " + std::to_string(d3.fractional_vertices) +
           " vertices, " + std::to_string(d3.candidates.size()) + " candidates, histogram" +
           hist.str();
  return true;
}

bool criterion9(std::string& detail) {
  bool ok = zhao_bound(2, 3) == make_rational(11, 3) && zhao_bound(3, 2) == make_rational(9, 2);
  detail = "zhao_bound(2,3) = " + rational_to_string(zhao_bound(2, 3)) +
           ", zhao_bound(3,2) = " + rational_to_string(zhao_bound(3, 2));
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "2-approximation certificate on the 100-instance EC corpus", criterion1},
      {2, "true-OPT sandwich on corpus instances with <= 14 edges", criterion2},
      {3, "half-edge theorem on every certified fully fractional vertex", criterion3},
      {4, "laminar certification and counting identities", criterion4},
      {5, "residual skew-supermodularity and cut-function properties", criterion5},
      {6, "hypergraph/element connectivity equivalence and composition", criterion6},
      {7, "elem pipeline against brute-force OPT", criterion7},
      {8, "problem-1 explorer at d = 2 and d = 3", criterion8},
      {9, "harmonic comparator values", criterion9},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1fs) - %s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, seconds, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criteria FAILED\n", failures);
  else std::printf("all 9 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
