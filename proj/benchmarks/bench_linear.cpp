#include <benchmark/benchmark.h>

#include <fstream>
#include <random>

#include "wgram/polyring_linear.hpp"

using namespace wgram;

namespace {

IntMatrix random_int_matrix(int n, long bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Int(long(std::uniform_int_distribution<long>(-bound, bound)(rng)));
  return m;
}

void BM_int_inverse(benchmark::State& state) {
  IntMatrix a = random_int_matrix(int(state.range(0)), 9, 7);
  for (auto _ : state) {
    auto inv = int_inverse(a);
    benchmark::DoNotOptimize(inv);
  }
}

void BM_padic_membership(benchmark::State& state) {
  const int n = int(state.range(0));
  IntMatrix a = random_int_matrix(n, 9, 11);
  IntVec v(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) v[j] += (i % 3 - 1) * a.at(i, j);
  for (auto _ : state) {
    auto r = padic_decompose(a, v, 251);
    benchmark::DoNotOptimize(r);
  }
}

void BM_poly_inverse_printed_btilde(benchmark::State& state) {
  std::ifstream in(std::string(WGRAM_DATA_DIR) + "/e6_10s_Btilde.mat");
  if (!in) {
    state.SkipWithError("fixture missing");
    return;
  }
  PolyMatrix btilde = read_matrix(in).as_dense();
  for (auto _ : state) {
    auto inv = poly_inverse(btilde);
    benchmark::DoNotOptimize(inv);
  }
}

void BM_poly_matmul_lifted(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const int n = int(state.range(0));
  PolyMatrix a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntVec c(5);
      for (auto& x : c) x = Int(long(rng() % 200) - 100);
      a.at(i, j) = IntPoly::from_coeffs(c);
      for (auto& x : c) x = Int(long(rng() % 200) - 100);
      b.at(i, j) = IntPoly::from_coeffs(c);
    }
  for (auto _ : state) {
    auto c = poly_matmul_lifted(a, b);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(BM_int_inverse)->Arg(6)->Arg(10)->Arg(16);
BENCHMARK(BM_padic_membership)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_poly_inverse_printed_btilde);
BENCHMARK(BM_poly_matmul_lifted)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
