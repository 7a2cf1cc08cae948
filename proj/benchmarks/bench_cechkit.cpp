#include <random>

#include <benchmark/benchmark.h>

#include "cechkit/aabb.hpp"
#include "cechkit/cech.hpp"
#include "cechkit/filtration.hpp"

namespace {

using namespace cechkit;

// Random disks in [-1, 1]^d, rescaled to a multiple of their Rips scale.
DiskSystem random_system(std::size_t d, std::size_t m, double rips_multiple, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0), radius(0.2, 1.0);
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < m; ++i) {
    Vector c(static_cast<Eigen::Index>(d));
    for (auto& x : c) x = coord(rng);
    disks.emplace_back(c, radius(rng));
  }
  const DiskSystem system(std::move(disks));
  return rescale(system, rips_multiple * rips_scale(system));
}

void BM_IsCechSystem(benchmark::State& state) {
  const auto system = random_system(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                                    1.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_cech_system(system));
}
BENCHMARK(BM_IsCechSystem)->ArgsProduct({{2, 3}, {3, 6, 12}});

void BM_CechScale(benchmark::State& state) {
  const auto system = random_system(static_cast<std::size_t>(state.range(0)), 4, 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cech_scale(system, 1e-9));
}
BENCHMARK(BM_CechScale)->Arg(2)->Arg(3);

void BM_AabbMinimal(benchmark::State& state) {
  const auto system = random_system(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                                    1.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(aabb_minimal(system));
}
BENCHMARK(BM_AabbMinimal)->ArgsProduct({{2, 3}, {3, 6}});

void BM_BuildFiltration(benchmark::State& state) {
  const auto system = random_system(3, static_cast<std::size_t>(state.range(0)), 1.0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_filtration(system, {.max_dimension = 3, .threads = 1}));
}
BENCHMARK(BM_BuildFiltration)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
