#include <benchmark/benchmark.h>

#include <random>

#include "cli/suites.hpp"
#include "orecurv/desing.hpp"
#include "orecurv/pcurv.hpp"
#include "orecurv/random.hpp"

using namespace orecurv;
using namespace orecurv::cli;

namespace {

const std::string kCorpus = ORECURV_CORPUS_DIR;

OreP corpus_fp(const std::string& name) { return prim(std::get<OreP>(load_entry(kCorpus + "/" + name + ".op").op)); }
OreQ corpus_q(const std::string& name) { return std::get<OreQ>(load_entry(kCorpus + "/rational/" + name + ".op").op); }

const char* kChiInputs[] = {"gauss_101_3", "lclm_101_2", "product_101_1", "a002777_like", "a151329_like"};

void BM_ChiExact(benchmark::State& state) {
  OreP l = corpus_fp(kChiInputs[state.range(0)]);
  state.SetLabel(kChiInputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(chi(l).prim_chi);
}

void BM_ChiXiDesing(benchmark::State& state) {
  OreP l = corpus_fp(kChiInputs[state.range(0)]);
  state.SetLabel(kChiInputs[state.range(0)]);
  int d1 = 0;
  for (auto _ : state) {
    XiReport r = xi_p_desing_report(l);
    d1 = r.d1;
    benchmark::DoNotOptimize(r.prim_chi);
  }
  state.counters["d1"] = d1;
}

void BM_DesingAlgorithm2(benchmark::State& state) {
  OreQ l = corpus_q(state.range(0) == 0 ? "order_one" : "lclm_x109");
  for (auto _ : state) benchmark::DoNotOptimize(lc1_algorithm2(l).lc1);
}

void BM_DesingAlgorithm3(benchmark::State& state) {
  OreQ l = corpus_q(state.range(0) == 0 ? "order_one" : "lclm_x109");
  for (auto _ : state) benchmark::DoNotOptimize(lc1_tc1_algorithm3(l).lc1);
}

void BM_DesingLclmMethod(benchmark::State& state) {
  OreQ l = corpus_q(state.range(0) == 0 ? "order_one" : "lclm_x109");
  for (auto _ : state) benchmark::DoNotOptimize(lclm_method(l, 1, 1, 7));
}

void BM_MulFp(benchmark::State& state) {
  PrimeField f(53);
  std::mt19937_64 rng(1);
  PolyP a = random_poly(f, static_cast<int>(state.range(0)), rng, true);
  PolyP b = random_poly(f, static_cast<int>(state.range(0)), rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_ChiExact)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiXiDesing)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DesingAlgorithm2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DesingAlgorithm3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DesingLclmMethod)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulFp)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK_MAIN();
