#include "srf/linalg.hpp"
#include "srf/recovery.hpp"
#include "srf/szego.hpp"
#include "srf/system.hpp"

#include <benchmark/benchmark.h>

using namespace srf;

namespace {

SystemParams params(const char* y, Bits bits) { return SystemParams::from_y(HPReal::parse(y, bits)); }

void BM_BuildGram(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const Bits bits = static_cast<Bits>(state.range(1));
  const SystemParams p = params("0.1", bits);
  for (auto _ : state) benchmark::DoNotOptimize(build_gram(p, SupportSet::contiguous(size), bits));
}
BENCHMARK(BM_BuildGram)->Args({8, 256})->Args({16, 256})->Args({16, 1024});

void BM_JacobiEigen(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const Bits bits = static_cast<Bits>(state.range(1));
  const Matrix<HPReal> g = build_gram(params("0.1", bits), SupportSet::contiguous(size), bits).entries;
  for (auto _ : state) benchmark::DoNotOptimize(hp_symmetric_eigen(g, bits));
}
BENCHMARK(BM_JacobiEigen)->Args({4, 256})->Args({8, 256})->Args({8, 1024})->Args({13, 1024})->Unit(benchmark::kMillisecond);

void BM_MinEigLadder(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const SystemParams p = params("0.05", 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        min_eig_adaptive([&](Bits bits) { return build_gram(p, SupportSet::contiguous(size), bits).entries; }));
  }
}
BENCHMARK(BM_MinEigLadder)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_L0Solve(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const Bits bits = 256;
  const SystemParams p = params("0.2", bits);
  const SupportSet window = SupportSet::contiguous(width);
  const MeasurementVector f = synthesize(
      p, CoefficientVector::real({1, static_cast<long>(width) - 2}, {HPReal(1.0, bits), HPReal(-0.5, bits)}), window);
  for (auto _ : state) benchmark::DoNotOptimize(l0_solve(p, f, HPReal(1e-20, bits), 3, bits));
}
BENCHMARK(BM_L0Solve)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PhiMap(benchmark::State& state) {
  const Bits bits = static_cast<Bits>(state.range(0));
  const HPReal c = params("0.1", bits).capacity();
  const HPComplex z(HPReal(1.5, bits), HPReal(0.75, bits));
  for (auto _ : state) benchmark::DoNotOptimize(Phi_map(c, z));
}
BENCHMARK(BM_PhiMap)->Arg(128)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
