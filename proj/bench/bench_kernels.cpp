// Serial reference loops against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "bmo/brauer_manin.hpp"
#include "bmo/sweeps.hpp"

using namespace bmo;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_HilbertSweep(benchmark::State& state) {
  auto values = small_rationals(20);
  const std::vector<Place> places{Place::prime(2), Place::prime(3), Place::prime(5)};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_oracle_sweep(values, places, exec_of(state)));
  label(state);
}
BENCHMARK(BM_HilbertSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IsotropySweep(benchmark::State& state) {
  const std::vector<long> coeffs{-3, -2, -1, 1, 2, 3};
  const std::vector<std::size_t> ranks{2, 3, 4};
  auto forms = diagonal_forms(coeffs, ranks);
  for (auto _ : state) benchmark::DoNotOptimize(isotropy_oracle_sweep(forms, 12, exec_of(state)));
  label(state);
}
BENCHMARK(BM_IsotropySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GramSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gram_determinant_sweep(3, exec_of(state)));
  label(state);
}
BENCHMARK(BM_GramSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  Fourfold x(TernaryForm::reference_form());
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? search_rational_points(x, 2, 2) : search_rational_points_serial(x, 2, 2));
  label(state);
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
