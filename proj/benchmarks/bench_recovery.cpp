// The lattice view of rational recovery is claimed to save quotient and
// remainder steps over walking the continued-fraction convergents with
// nonnegative residues. The claim ships without figures, so it lives here
// as a benchmark: gauss_reduce (best approximation, numerically smallest
// residues) against a convergent-walking reference.

#include <benchmark/benchmark.h>

#include <random>

#include "wgram/poly_recovery.hpp"

using namespace wgram;

namespace {

// Reference: walk the extended Euclid convergents with nonnegative
// residues and stop at the first [s_i, r_i] with s^2 + r^2 < b.
std::optional<std::pair<Int, Int>> recover_by_convergents(const Int& a0, const Int& b) {
  Int a = a0 < 0 ? a0 + b : a0;
  Int r0 = b, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    if (s1 * s1 + r1 * r1 < b) {
      if (gcd(s1, r1) != 1) return std::nullopt;
      return std::make_pair(s1, r1);
    }
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return std::nullopt;
}

std::vector<std::pair<Int, Int>> recovery_inputs(int count, int bits) {
  std::mt19937_64 rng(99);
  std::vector<std::pair<Int, Int>> out;
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, 4242);
  for (int i = 0; i < count; ++i) {
    Int b;
    mpz_urandomb(b.get_mpz_t(), st, bits);
    b += Int(1) << (bits - 1);
    Int x = 1 + Int(rng() % 1000), y = Int(rng() % 2000) - 1000;
    if (gcd(x, b) != 1 || gcd(x, y) != 1) {
      --i;
      continue;
    }
    out.push_back({symmetric_mod(y * mod_inverse(x, b), b), b});
  }
  gmp_randclear(st);
  return out;
}

void BM_recover_lattice(benchmark::State& state) {
  auto inputs = recovery_inputs(256, int(state.range(0)));
  for (auto _ : state) {
    for (const auto& [a, b] : inputs) {
      auto r = recover_rational(Residue(a, b));
      benchmark::DoNotOptimize(r);
    }
  }
}

void BM_recover_convergents(benchmark::State& state) {
  auto inputs = recovery_inputs(256, int(state.range(0)));
  for (auto _ : state) {
    for (const auto& [a, b] : inputs) {
      auto r = recover_by_convergents(a, b);
      benchmark::DoNotOptimize(r);
    }
  }
}

void BM_crt_lift(benchmark::State& state) {
  std::vector<Int> moduli;
  AscendingPrimePlaces sched(1000);
  for (int i = 0; i < int(state.range(0)); ++i) moduli.push_back(sched.next());
  CrtContext ctx(moduli);
  std::vector<Int> residues;
  for (const auto& m : moduli) residues.push_back(m / 2 - 3);
  for (auto _ : state) {
    Int lifted = ctx.lift(residues);
    benchmark::DoNotOptimize(lifted);
  }
}

}  // namespace

BENCHMARK(BM_recover_lattice)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_recover_convergents)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_crt_lift)->Arg(4)->Arg(16)->Arg(64);
