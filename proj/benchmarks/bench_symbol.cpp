#include <benchmark/benchmark.h>

#include "gispec/rng.hpp"
#include "gispec/symbol.hpp"

using namespace gispec;

static void BM_sigma_pt_closed_form(benchmark::State& state) {
  Rng rng(1);
  const Vec3 omega(0.2, 0.1, 0.9);
  const Vec3 ghat = rng.unit_vector();
  for (auto _ : state) {
    const Vec3 xi = rng.unit_vector();
    benchmark::DoNotOptimize(symbol::sigma_pt_fields(omega, 2.0, ghat, true, xi));
  }
}
BENCHMARK(BM_sigma_pt_closed_form);

static void BM_rank_oracle(benchmark::State& state) {
  Rng rng(2);
  const Vec3 omega(0.2, 0.1, 0.9);
  const Vec3 ghat = rng.unit_vector();
  for (auto _ : state) {
    const Vec3 xi = rng.unit_vector();
    const auto sym = symbol::symbol_matrix_fields(omega, 2.0, ghat, true, xi, Complex(0.3, 0.8));
    benchmark::DoNotOptimize(symbol::rank_deficiency_ratio(sym));
  }
}
BENCHMARK(BM_rank_oracle);
