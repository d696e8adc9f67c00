#include "sndp/connectivity.hpp"
#include "sndp/generate.hpp"
#include "sndp/oracle.hpp"
#include "sndp/requirement.hpp"
#include "sndp/rounding.hpp"

#include <benchmark/benchmark.h>

using namespace sndp;

namespace {

EcInstance bench_instance(int n, int m, int rmax, std::uint64_t seed) {
  GenParams params;
  params.kind = InstanceKind::Ec;
  params.n = n;
  params.count = m;
  params.rmax = rmax;
  params.pair_count = n;
  params.seed = seed;
  return std::get<EcInstance>(generate(params));
}

void BM_MaxFlow(benchmark::State& state) {
  EcInstance inst = bench_instance(10, 20, 3, 5);
  std::vector<int> ids(inst.graph.edge_count());
  for (int i = 0; i < inst.graph.edge_count(); ++i) ids[i] = i;
  auto pair = inst.requirements.pairs().begin()->first;
  for (auto _ : state)
    benchmark::DoNotOptimize(edge_connectivity(inst.graph, ids, pair.first, pair.second));
}
BENCHMARK(BM_MaxFlow);

void BM_SeparationOracle(benchmark::State& state) {
  EcInstance inst = bench_instance(10, 20, 3, 5);
  Hypergraph ground = as_hypergraph(inst.graph);
  std::map<int, Rational> x;
  for (int id = 0; id < ground.edge_count(); ++id) x[id] = make_rational(id % 3, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_violated_cut(ground, x, {}, inst.requirements));
}
BENCHMARK(BM_SeparationOracle);

void BM_SkewSupermodularCheck(benchmark::State& state) {
  EcInstance inst = bench_instance(8, 14, 2, 9);
  RequirementFn f = RequirementFn::pairwise_max(8, inst.requirements);
  for (auto _ : state) benchmark::DoNotOptimize(check_skew_supermodular(f));
}
BENCHMARK(BM_SkewSupermodularCheck);

void BM_SolveEc(benchmark::State& state) {
  EcInstance inst = bench_instance(static_cast<int>(state.range(0)),
                                   static_cast<int>(2 * state.range(0)), 3, 11);
  JainOptions options;
  options.certify_vertices = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_ecsndp(inst, options));
}
BENCHMARK(BM_SolveEc)->Arg(6)->Arg(8)->Arg(10);

void BM_SolveEcCertified(benchmark::State& state) {
  EcInstance inst = bench_instance(8, 16, 3, 11);
  JainOptions options;
  options.certify_vertices = true;
  for (auto _ : state) benchmark::DoNotOptimize(solve_ecsndp(inst, options));
}
BENCHMARK(BM_SolveEcCertified);

void BM_BruteForceOpt(benchmark::State& state) {
  EcInstance inst = bench_instance(7, 12, 2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(Instance(inst)));
}
BENCHMARK(BM_BruteForceOpt);

}  // namespace

BENCHMARK_MAIN();
