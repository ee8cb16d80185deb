#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "robplam/bsplines.hpp"
#include "robplam/inference.hpp"
#include "robplam/plam.hpp"
#include "robplam/robust_solvers.hpp"
#include "robplam/simlab.hpp"

using namespace robplam;

namespace {

SimSample sample(int n, Contamination c = Contamination::C0) {
  std::mt19937_64 rng(20190101);
  return contaminate(generate(1, n, rng), c, rng);
}

DesignMatrix design(const SimSample& s, int k) {
  std::vector<CenteredSplineBasis> bases;
  for (Eigen::Index j = 0; j < s.X.cols(); ++j) {
    std::vector<double> col(s.X.col(j).data(), s.X.col(j).data() + s.X.rows());
    bases.push_back(CenteredSplineBasis::build(col, 4, k, KnotMode::Uniform));
  }
  return assemble_design(s.Z, s.X, bases);
}

void BM_MScale(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z;
  Eigen::VectorXd r(state.range(0));
  for (auto& v : r) v = z(rng);
  const MScaleSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(m_scale(r, spec));
}
BENCHMARK(BM_MScale)->Arg(100)->Arg(1000)->Arg(10000);

void BM_DesignAssembly(benchmark::State& state) {
  const auto s = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(design(s, 8).matrix.data());
}
BENCHMARK(BM_DesignAssembly)->Arg(100)->Arg(1000);

void BM_SEstimator(benchmark::State& state) {
  const auto s = sample(100, Contamination::C2);
  const auto d = design(s, static_cast<int>(state.range(0)));
  MScaleSpec spec;
  spec.dof_correction = static_cast<int>(d.cols() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(s_estimator(d, s.y, spec, SolverConfig{}).scale);
}
BENCHMARK(BM_SEstimator)->Arg(4)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_FitMM(benchmark::State& state) {
  const auto s = sample(100, Contamination::C2);
  PlamSpec spec;
  if (state.range(0) > 0) spec.k_grid = {static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(fit(s.Z, s.X, s.y, spec).mu_hat);
}
// 0: full RBIC search over the default grid, as in one simulation replication
BENCHMARK(BM_FitMM)->Arg(5)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_FitLS(benchmark::State& state) {
  const auto s = sample(100);
  PlamSpec spec;
  spec.method = Method::LS;
  for (auto _ : state) benchmark::DoNotOptimize(fit(s.Z, s.X, s.y, spec).mu_hat);
}
BENCHMARK(BM_FitLS)->Unit(benchmark::kMillisecond);

void BM_Covariance(benchmark::State& state) {
  const auto s = sample(100);
  PlamSpec spec;
  spec.k_grid = {5};
  const auto f = fit(s.Z, s.X, s.y, spec);
  for (auto _ : state) {
    const auto h = fit_hstar(s.Z, s.X, f.bases, spec);
    benchmark::DoNotOptimize(sigma_hat_matrix(f, s.Z, s.X, h, CovarianceMethod::Sandwich).std_errors.data());
  }
}
BENCHMARK(BM_Covariance)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
