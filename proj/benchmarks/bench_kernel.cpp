#include <benchmark/benchmark.h>

#include "dtknot/qsymbols.hpp"
#include "dtknot/twist_coeffs.hpp"

using namespace dtknot;

namespace {

void BM_LaurentMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentPoly lhs = brace_a_ff(n, n);
  const LaurentPoly rhs = brace_a_ff(n - 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(lhs * rhs);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(8)->Arg(12);

void BM_ExactDivBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentPoly num = brace_ff(n, n / 2);
  const LaurentPoly den = qfact(n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(num, den));
}
BENCHMARK(BM_ExactDivBinomial)->Arg(8)->Arg(16)->Arg(24);

void BM_QBinom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qbinom(n, n / 2));
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16);

void BM_CTilde(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(c_tilde(k, p));
}
BENCHMARK(BM_CTilde)->Args({4, 2})->Args({6, 2})->Args({6, 3})->Args({8, 3});

void BM_TwistScalarEquality(benchmark::State& state) {
  // cross-multiplication equality in the fraction field, the heaviest
  // identity check in the verification suites
  const int n = static_cast<int>(state.range(0));
  const RationalFn lhs = T_twist(n, 3);
  const RationalFn rhs(c_general(n, n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(lhs == rhs);
}
BENCHMARK(BM_TwistScalarEquality)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
