#include <benchmark/benchmark.h>

#include "gispec/galerkin.hpp"

using namespace gispec;

static void BM_build_basis(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(galerkin::build_basis(degree));
  }
}
BENCHMARK(BM_build_basis)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_assemble_pencil(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto basis = galerkin::build_basis(degree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        galerkin::assemble_pencil(basis, Vec3(0, 0, 1), 4.0, galerkin::GhatMode::kConstant));
  }
}
BENCHMARK(BM_assemble_pencil)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_solve_modes(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto basis = galerkin::build_basis(degree);
  const auto pencil =
      galerkin::assemble_pencil(basis, Vec3(0, 0, 1), 0.0, galerkin::GhatMode::kConstant);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galerkin::solve_modes(pencil));
  }
}
BENCHMARK(BM_solve_modes)->Arg(2)->Arg(4)->Arg(6);
