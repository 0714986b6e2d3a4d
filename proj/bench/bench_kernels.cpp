// Serial reference kernels against their OpenMP variants.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rsd/ccs.hpp"
#include "rsd/estimators.hpp"
#include "rsd/kernels.hpp"

namespace {

// Balanced population of n items, targets skewed so the class count optimum
// lands off the diagonal and the triangle is non-trivial.
struct Fixture {
  rsd::Population population;
  std::vector<std::uint32_t> items;

  explicit Fixture(std::size_t n) : population(make(n)) {
    for (std::uint32_t i = 0; i < population.size(); ++i) items.push_back(i);
  }

  static rsd::Population make(std::size_t n) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> y;
    std::vector<int> c;
    for (std::size_t i = 0; i < n; ++i) {
      const int cls = static_cast<int>(i % 2);
      y.push_back(noise(rng) + (cls == 1 ? 0.8 : 0.0));
      c.push_back(cls);
    }
    return rsd::Population::from_columns(y, c);
  }
};

template <rsd::kernels::ScanResult (*Kernel)(const rsd::CcsObjective&)>
void grid(benchmark::State& state) {
  const Fixture fx(static_cast<std::size_t>(state.range(0)));
  const rsd::SubgroupView q(fx.population, fx.items);
  const rsd::CcsObjective obj(q, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(obj));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>((obj.m1() + 1) * (obj.m2() + 1)));
}

template <rsd::kernels::ScanResult (*Kernel)(const rsd::CcsObjective&, rsd::CcsPoint)>
void triangle(benchmark::State& state) {
  const Fixture fx(static_cast<std::size_t>(state.range(0)));
  const rsd::SubgroupView q(fx.population, fx.items);
  const rsd::CcsObjective obj(q, 0.5);
  const rsd::CcsPoint gamma = rsd::optimal_ct_point(q).point;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(obj, gamma));
  state.counters["lines"] = static_cast<double>(rsd::kernels::triangle_line_count(gamma));
}

}  // namespace

BENCHMARK(grid<rsd::kernels::grid_max_serial>)->Name("grid_max/serial")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(grid<rsd::kernels::grid_max_omp>)->Name("grid_max/omp")->RangeMultiplier(4)->Range(256, 4096)->UseRealTime();
BENCHMARK(triangle<rsd::kernels::triangle_max_serial>)->Name("triangle_max/serial")->RangeMultiplier(8)->Range(1 << 12, 1 << 18);
BENCHMARK(triangle<rsd::kernels::triangle_max_omp>)
    ->Name("triangle_max/omp")
    ->RangeMultiplier(8)
    ->Range(1 << 12, 1 << 18)
    ->UseRealTime();

BENCHMARK_MAIN();
