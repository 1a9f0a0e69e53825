#include <benchmark/benchmark.h>

#include <chrono>

#include "hamdec/formulations.hpp"
#include "hamdec/heuristics.hpp"
#include "hamdec/instance_gen.hpp"
#include "hamdec/lp_format.hpp"
#include "hamdec/oracle.hpp"
#include "hamdec/orchestrator.hpp"

namespace {

using namespace hamdec;
using namespace std::chrono_literals;

Instance instance(const benchmark::State& state, InstanceKind kind, bool directed) {
  return generate_instance({kind, static_cast<int>(state.range(0)), directed, 7});
}

void BM_GenerateFourPeak(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_instance(
        {InstanceKind::FourPeak, static_cast<int>(state.range(0)), false, seed++}));
  }
}
BENCHMARK(BM_GenerateFourPeak)->Arg(64)->Arg(192)->Arg(1024);

void BM_SolveDfjBase(benchmark::State& state) {
  const Instance inst = instance(state, InstanceKind::RandomPermutation, false);
  const DfjModel dfj = build_dfj_base(inst.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ilp::solve(dfj.model, 60s));
  }
}
BENCHMARK(BM_SolveDfjBase)->Arg(64)->Arg(192)->Unit(benchmark::kMicrosecond);

void BM_Run(benchmark::State& state, Algorithm algorithm, InstanceKind kind,
            bool directed) {
  const Instance inst = instance(state, kind, directed);
  RunOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(algorithm, inst.graph, inst.x, inst.y, options));
  }
}
BENCHMARK_CAPTURE(BM_Run, dfj_permutation, Algorithm::Dfj,
                  InstanceKind::RandomPermutation, false)
    ->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, vnd_fix_permutation, Algorithm::DfjVndFix,
                  InstanceKind::RandomPermutation, false)
    ->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, vnd_permutation, Algorithm::DfjVnd,
                  InstanceKind::RandomPermutation, false)
    ->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, ls_directed_four_peak, Algorithm::DfjLs,
                  InstanceKind::FourPeak, true)
    ->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, mtz_pyramidal, Algorithm::Mtz, InstanceKind::Pyramidal,
                  false)
    ->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_VndFromBaseSolution(benchmark::State& state) {
  const Instance inst = instance(state, InstanceKind::RandomPermutation, false);
  const DfjModel dfj = build_dfj_base(inst.graph);
  const auto out = ilp::solve(dfj.model, 60s);
  const TwoFactorPair start = decode(out.assignment, dfj.mapping, inst.graph);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    TwoFactorPair pair = start;
    Rng rng(seed++);
    SearchContext ctx{rng, {}};
    benchmark::DoNotOptimize(vnd_undirected(pair, ctx));
  }
}
BENCHMARK(BM_VndFromBaseSolution)->Arg(192)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_Oracle(benchmark::State& state) {
  const Instance inst = instance(state, InstanceKind::Pyramidal, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_decompositions(inst.graph));
  }
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_LpRoundTrip(benchmark::State& state) {
  const Instance inst = instance(state, InstanceKind::FourPeak, false);
  const MtzModel mtz = build_mtz_undirected(inst.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ilp::parse_lp(ilp::export_lp(mtz.model)));
  }
}
BENCHMARK(BM_LpRoundTrip)->Arg(192)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
