#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/counting.hpp"
#include "nonoverlap/matrix.hpp"
#include "nonoverlap/verify.hpp"

#include <benchmark/benchmark.h>

using namespace nonoverlap;

static void BM_GenVFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_v_family(n, RunParams{3}));
  }
}
BENCHMARK(BM_GenVFamily)->Arg(13)->Arg(16)->Arg(20);

static void BM_MatrixOverlapPair(benchmark::State& state) {
  const MatrixFamily family = build_v_matrix_family(4, 13, 3);
  const BinaryMatrix& a = family.front();
  const BinaryMatrix& b = family.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_overlap(a, b, OverlapMode::strict));
  }
}
BENCHMARK(BM_MatrixOverlapPair);

static void BM_VerifyMatrixFamily(benchmark::State& state) {
  const MatrixFamily family = build_v_matrix_family(4, 13, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_matrix_family(family, OverlapMode::strict));
  }
}
BENCHMARK(BM_VerifyMatrixFamily)->Unit(benchmark::kMillisecond);

static void BM_CardVMatrices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(card_v_matrices(8, n, 3));
  }
}
BENCHMARK(BM_CardVMatrices)->Arg(30)->Arg(100);

static void BM_BruteOracle(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_r_oracle(l, 3));
  }
}
BENCHMARK(BM_BruteOracle)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
