#include <benchmark/benchmark.h>

#include "gispec/boundary.hpp"
#include "gispec/rng.hpp"

using namespace gispec;

namespace {

model::PlanetModel bench_model() {
  model::PlanetModel m;
  m.omega = Vec3(0.2, 0.0, 0.9);
  m.nsq = model::ProfileSpec::constant(2.0);
  m.gravity.mode = model::Gravity::Mode::kConstant;
  m.gravity.vector = Vec3(0.1, 0.2, -0.95).normalized();
  return m;
}

}  // namespace

static void BM_big_symbol_with_inverse(benchmark::State& state) {
  const auto m = bench_model();
  Rng rng(3);
  const auto frame = boundary::make_frame(m, Vec3(0, 0, 1), Vec3(1, 0, 0));
  for (auto _ : state) {
    const Vec3 xi = rng.unit_vector();
    benchmark::DoNotOptimize(boundary::assemble_big_symbol(m, frame, xi, Complex(0.7, 0.9)));
  }
}
BENCHMARK(BM_big_symbol_with_inverse);

static void BM_ode_matrix_eigs(benchmark::State& state) {
  const auto m = bench_model();
  const auto frame = boundary::make_frame(m, Vec3(0, 0, 1), Vec3(1, 0, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary::ode_matrix_eigs(m, frame, Complex(0.7, 0.9)));
  }
}
BENCHMARK(BM_ode_matrix_eigs);
