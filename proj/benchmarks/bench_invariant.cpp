#include <benchmark/benchmark.h>

#include "dtknot/cyclotomic.hpp"
#include "dtknot/output.hpp"

using namespace dtknot;

namespace {

void BM_DoubleTwistInvariant(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(homfly_double_twist({2, 2, N}));
}
BENCHMARK(BM_DoubleTwistInvariant)->DenseRange(2, 10, 2);

void BM_SuNInvariant(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su_n_invariant({2, 1, N}, 2));
}
BENCHMARK(BM_SuNInvariant)->Arg(4)->Arg(8);

void BM_ExtractCyclotomic(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_cyclotomic(2, 1, 2, kmax));
}
BENCHMARK(BM_ExtractCyclotomic)->Arg(4)->Arg(6);

void BM_VerifyConjecture(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(2, 2, 3, 4, 2));
}
BENCHMARK(BM_VerifyConjecture);

void BM_FormatJsonRecord(benchmark::State& state) {
  OutputRecord rec;
  rec.p = 2;
  rec.s = 2;
  rec.N = 8;
  rec.polynomial = homfly_double_twist({2, 2, 8});
  for (auto _ : state)
    benchmark::DoNotOptimize(format_output(rec, OutputFormat::Json));
}
BENCHMARK(BM_FormatJsonRecord);

}  // namespace

BENCHMARK_MAIN();
