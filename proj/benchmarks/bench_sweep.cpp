#include <benchmark/benchmark.h>

#include <app/config.hpp>
#include <app/sweep.hpp>

namespace {

// Full alpha sweep as run by `frbf interpolate`, by worker count.
void BM_InterpolationSweep(benchmark::State& state) {
  frbf::app::ExperimentConfig c;
  c.family = frbf::Family::four_term;
  c.N = 2.55;
  c.m = 3;
  c.frac_mode = frbf::FracMode::full_fractional;
  frbf::app::parse_alpha_spec("-0.9:0.9:0.1", c);
  c.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frbf::app::run_interpolation_sweep(c));
}
BENCHMARK(BM_InterpolationSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
