#include <benchmark/benchmark.h>

#include <frbf/catalog.hpp>
#include <frbf/collocate.hpp>
#include <frbf/errors.hpp>
#include <frbf/interpolate.hpp>
#include <frbf/kernels.hpp>
#include <frbf/nodes.hpp>
#include <frbf/precond.hpp>

namespace {

frbf::KernelSpec partial_false_tps(double alpha) {
  frbf::KernelSpec s;
  s.N = 3.22;
  s.b = 1.48;
  s.alpha = alpha;
  s.frac_mode = frbf::FracMode::partial_fractional;
  return s;
}

void BM_BuildKernel(benchmark::State& state) {
  const auto spec = partial_false_tps(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(frbf::build_kernel(spec));
}
BENCHMARK(BM_BuildKernel);

void BM_EvaluateKernel(benchmark::State& state) {
  const auto k = frbf::build_kernel(partial_false_tps(0.5));
  double r = 0.0;
  for (auto _ : state) {
    r = r < 1.4 ? r + 1e-3 : 0.0;
    benchmark::DoNotOptimize(k(r));
  }
}
BENCHMARK(BM_EvaluateKernel);

frbf::SaddleSystem interpolation_system(int ni, int per_side) {
  const auto nodes = frbf::make_node_set(frbf::Domain::square(0.28, 1.48), ni, per_side);
  const Eigen::MatrixXd x = nodes.all();
  const auto& g = frbf::find_problem("sin8-interp").g;
  Eigen::VectorXd u(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) u(i) = g(x.row(i).transpose());
  return frbf::assemble_interpolation(nodes, frbf::build_kernel(partial_false_tps(0.5)),
                                      frbf::TailSpec{frbf::TailKind::multivariate, 4, 2, 0.0}, u);
}

void BM_AssembleInterpolation(benchmark::State& state) {
  const int ni = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(interpolation_system(ni, 11));
}
BENCHMARK(BM_AssembleInterpolation)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_SolveDirect(benchmark::State& state) {
  const auto sys = interpolation_system(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(frbf::solve_system(sys));
    } catch (const frbf::Error&) {
    }
  }
}
BENCHMARK(BM_SolveDirect)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Precondition(benchmark::State& state) {
  const auto sys = interpolation_system(static_cast<int>(state.range(0)), 11);
  const Eigen::MatrixXd G = sys.matrix();
  const Eigen::VectorXd U = Eigen::VectorXd::Ones(G.rows());
  int n = 0;
  for (auto _ : state) n = frbf::precondition(G, U).n;
  state.counters["n"] = n;
}
BENCHMARK(BM_Precondition)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Collocation(benchmark::State& state) {
  const frbf::Domain domain = frbf::Domain::square(0.0, 1.0);
  const auto& p = frbf::find_problem("sin8-colloc");
  const frbf::RadialOperator op{1e-6, frbf::DerivativeKind::caputo};
  const frbf::CollocationProblem problem{
      domain, frbf::make_node_set(domain, static_cast<int>(state.range(0)), 16), op, p.f, p.g};
  frbf::KernelSpec s;
  s.N = 4.255;
  s.alpha = -1.8;
  s.frac_mode = frbf::FracMode::full_fractional;
  const auto kernel = frbf::build_kernel(s);
  const frbf::TailSpec tail{frbf::TailKind::radial, 5, 2, frbf::operator_orders(op).o};
  for (auto _ : state) benchmark::DoNotOptimize(frbf::solve_collocation(problem, kernel, tail));
}
BENCHMARK(BM_Collocation)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
