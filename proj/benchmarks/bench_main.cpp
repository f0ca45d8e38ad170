#include <benchmark/benchmark.h>

#include <random>

#include "qunit/entangle.hpp"
#include "qunit/symmetry.hpp"

using namespace qunit;

namespace {

hilbert::StateVector gaussian_state(const hilbert::SpaceSpec& space, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss;
  hilbert::Vector v(static_cast<Eigen::Index>(space.dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {gauss(engine), gauss(engine)};
  return hilbert::StateVector(space, v).normalized();
}

void BM_CharacterTable(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry::character_table(N));
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 8, 2);

void BM_IsotypicProjector(benchmark::State& state) {
  const hilbert::SpaceSpec space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto lambda = tableaux::enumerate_partitions(space.particles())[1];
  for (auto _ : state) benchmark::DoNotOptimize(symmetry::isotypic_projector(lambda, space));
}
BENCHMARK(BM_IsotypicProjector)->Args({2, 4})->Args({3, 3})->Args({2, 6})->Args({3, 5})
    ->Unit(benchmark::kMillisecond);

void BM_ApplyIsotypicProjector(benchmark::State& state) {
  const hilbert::SpaceSpec space(2, static_cast<int>(state.range(0)));
  const auto psi = gaussian_state(space, 1);
  const auto lambda = tableaux::enumerate_partitions(space.particles())[1];
  for (auto _ : state) benchmark::DoNotOptimize(symmetry::apply_isotypic_projector(lambda, psi));
}
BENCHMARK(BM_ApplyIsotypicProjector)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ReducedDensityMatrix(benchmark::State& state) {
  const hilbert::SpaceSpec space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto psi = gaussian_state(space, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::reduced_density_matrix(psi, {1}));
}
BENCHMARK(BM_ReducedDensityMatrix)->Args({2, 8})->Args({3, 6})->Args({4, 6});

void BM_VerifyEntanglement(benchmark::State& state) {
  const hilbert::SpaceSpec space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto psi = gaussian_state(space, 3);
  for (auto _ : state) benchmark::DoNotOptimize(entangle::verify_entanglement(psi));
}
BENCHMARK(BM_VerifyEntanglement)->Args({2, 4})->Args({3, 4})->Args({2, 8});

void BM_GhzBasis(benchmark::State& state) {
  const hilbert::SpaceSpec space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(entangle::ghz_basis(space));
}
BENCHMARK(BM_GhzBasis)->Args({3, 3})->Args({2, 6})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_CoupledBasis(benchmark::State& state) {
  const hilbert::SpaceSpec space(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry::coupled_basis(space));
}
BENCHMARK(BM_CoupledBasis)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
