#include <benchmark/benchmark.h>

#include <random>

#include "epsalg/brace.hpp"
#include "epsalg/categorical.hpp"
#include "epsalg/double.hpp"
#include "epsalg/examples.hpp"
#include "epsalg/prelie.hpp"

using namespace epsalg;

static void BM_EpsAxiomsChain(benchmark::State& state) {
  const EpsBialgebra A = quiver_path_algebra(chain_quiver());
  CheckOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_eps_axioms(A, {}, opts).passed());
}
BENCHMARK(BM_EpsAxiomsChain)->Arg(1)->Arg(4);

static void BM_BuildDouble(benchmark::State& state) {
  const EpsBialgebra A = quiver_path_algebra(state.range(0) == 0 ? single_arrow_quiver() : triangle_quiver());
  for (auto _ : state) benchmark::DoNotOptimize(build_double(A).algebra.dim());
}
BENCHMARK(BM_BuildDouble)->Arg(0)->Arg(1);

static void BM_DoubleAxioms(benchmark::State& state) {
  const DoubleAlgebra D = build_double(a3());
  CheckOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_eps_axioms(D.algebra, {}, opts).passed());
}
BENCHMARK(BM_DoubleAxioms)->Arg(1)->Arg(4);

static void BM_PreLieLaurent(benchmark::State& state) {
  const EpsBialgebra L = divided_differences(static_cast<Index>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_prelie(prelie_from_eps(L), Probe::of(L)).passed());
}
BENCHMARK(BM_PreLieLaurent)->Arg(3)->Arg(5);

static void BM_BraceAxiomA3(benchmark::State& state) {
  const EpsBialgebra A = a3();
  const BraceStructure B = brace_from_eps(A, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_brace_up_to(B, 3, 2, Probe::of(A)).passed());
}
BENCHMARK(BM_BraceAxiomA3);

static void BM_CircEquivalence(benchmark::State& state) {
  std::mt19937_64 rng(kAppendixSeed);
  std::vector<EpsBialgebra> cands;
  for (int k = 0; k < 50; ++k) cands.push_back(random_candidate(rng, 3));
  for (auto _ : state) {
    for (const auto& A : cands) benchmark::DoNotOptimize(check_comonoid_alg_equiv(A).agree());
  }
}
BENCHMARK(BM_CircEquivalence);

static void BM_CounitalQuasiZero(benchmark::State& state) {
  const EpsBialgebra P = augment_plus(quiver_path_algebra(state.range(0) == 0 ? single_arrow_quiver() : chain_quiver()));
  for (auto _ : state) benchmark::DoNotOptimize(check_counital_quasi_zero(P).report.passed());
}
BENCHMARK(BM_CounitalQuasiZero)->Arg(0)->Arg(1);
BENCHMARK_MAIN();
