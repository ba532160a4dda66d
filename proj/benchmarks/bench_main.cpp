#include <benchmark/benchmark.h>

#include <cmath>

#include "ecodyn/fredholm.hpp"
#include "ecodyn/leontief.hpp"
#include "ecodyn/odelin.hpp"
#include "ecodyn/reduction.hpp"

using namespace ecodyn;

static void BM_Rk4Oscillator(benchmark::State& state) {
  const TimeGrid grid(0.0, 10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto t = rk4_integrate([](double, const Vector& x) { return Vector{x[1], -x[0]}; }, {1.0, 0.0}, grid);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Rk4Oscillator)->Arg(1000)->Arg(10000);

static void BM_NystromSolve(benchmark::State& state) {
  const fredholm::NystromDiscretization disc(fredholm::kernel_t_plus_eta(), fredholm::Rule::simpson,
                                             static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto sol = fredholm::nystrom_solve(disc, 0.5, [](double) { return 1.0; });
    benchmark::DoNotOptimize(sol.at_nodes());
  }
}
BENCHMARK(BM_NystromSolve)->Arg(51)->Arg(201);

static void BM_NystromDiscretize(benchmark::State& state) {
  for (auto _ : state) {
    fredholm::NystromDiscretization disc(fredholm::kernel_exp_diff(), fredholm::Rule::simpson,
                                         static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(disc.eigenvalues());
  }
}
BENCHMARK(BM_NystromDiscretize)->Arg(51)->Arg(201);

static void BM_StaticSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXd A = Eigen::MatrixXd::Constant(n, n, 0.5 / n);
  const Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  const auto method = state.range(1) == 0 ? leontief::Method::direct : leontief::Method::iterate;
  for (auto _ : state) {
    auto r = leontief::static_solve(A, c, method);
    benchmark::DoNotOptimize(r.X);
  }
}
BENCHMARK(BM_StaticSolve)->Args({8, 0})->Args({8, 1})->Args({64, 0})->Args({64, 1});

static void BM_LeontiefVolterra(benchmark::State& state) {
  leontief::LeontiefModel m;
  m.A = Eigen::MatrixXd::Constant(3, 3, 0.2);
  m.demand = leontief::constant_demand(Eigen::VectorXd::Ones(3));
  m.X0 = Eigen::VectorXd::Ones(3);
  m.Xdot0 = Eigen::VectorXd::Zero(3);
  const TimeGrid grid(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto t = leontief::volterra_solve(m, grid);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_LeontiefVolterra)->Arg(100)->Arg(400);

static void BM_ReductionCosine(benchmark::State& state) {
  const double init[] = {1.0, 0.0};
  const auto problem = fredholm::ode_to_integral(OdeSpec{{1.0, 0.0, 1.0}, {}}, init);
  const TimeGrid grid(0.0, 1.0, 200);
  for (auto _ : state) {
    auto s = fredholm::solve_initial_value(problem, grid);
    benchmark::DoNotOptimize(s.error_estimate);
  }
}
BENCHMARK(BM_ReductionCosine);
BENCHMARK_MAIN();
