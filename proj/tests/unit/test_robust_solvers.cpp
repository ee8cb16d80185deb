#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "robplam/bsplines.hpp"
#include "robplam/error.hpp"
#include "robplam/linalg.hpp"
#include "robplam/robust_solvers.hpp"
#include "robplam/simlab.hpp"

using namespace robplam;

namespace {

DesignMatrix model1_design(const SimSample& s, int k) {
  std::vector<CenteredSplineBasis> bases;
  for (int j = 0; j < s.X.cols(); ++j) {
    std::vector<double> col(s.X.col(j).data(), s.X.col(j).data() + s.X.rows());
    bases.push_back(CenteredSplineBasis::build(col, 4, k, KnotMode::Uniform));
  }
  return assemble_design(s.Z, s.X, bases);
}

MScaleSpec spec_for(const DesignMatrix& d) {
  MScaleSpec spec;
  spec.dof_correction = static_cast<int>(d.cols() - 1);
  return spec;
}

SimSample model1(std::uint64_t seed, int n = 100) {
  std::mt19937_64 rng(seed);
  return generate(1, n, rng);
}

}  // namespace

TEST_SUITE("robust_solvers") {

TEST_CASE("m_scale degenerate and error cases") {
  const std::vector<double> zeros(20, 0.0);
  CHECK(m_scale(zeros, MScaleSpec{}) == 0.0);
  // 15 of 20 exact zeros: at most 5 nonzero terms cannot reach b * 20 = 10
  std::vector<double> mostly(20, 0.0);
  for (int i = 0; i < 5; ++i) mostly[static_cast<std::size_t>(i)] = 1.0 + i;
  CHECK(m_scale(mostly, MScaleSpec{}) == 0.0);
  CHECK_THROWS_AS(m_scale(std::vector<double>{}, MScaleSpec{}), Error);
  MScaleSpec bad;
  bad.dof_correction = 5;
  CHECK_THROWS_AS(m_scale(std::vector<double>(5, 1.0), bad), Error);
}

TEST_CASE("m_scale solves its equation and matches bisection") {
  const auto r = oracle::normal_draws(200, 20190101);
  const MScaleSpec spec;
  const double s = m_scale(r, spec);
  double sum = 0.0;
  for (double v : r) sum += rho(spec.rho0, v / s);
  CHECK(std::abs(sum / 200.0 - 0.5) <= 1e-8);
  const double maxabs = std::abs(*std::max_element(r.begin(), r.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  }));
  const double ref = oracle::bisection_m_scale(r, spec.rho0, 0.5, 200.0, 1e-12, 10.0 * maxabs);
  CHECK(std::abs(s - ref) <= 1e-8);
  // Fisher consistency: close to 1 for standard normal residuals
  CHECK(std::abs(s - 1.0) < 0.2);
}

TEST_CASE("m_scale with a degrees-of-freedom correction") {
  const auto r = oracle::normal_draws(60, 4);
  MScaleSpec spec;
  spec.dof_correction = 13;
  const double s = m_scale(r, spec);
  double sum = 0.0;
  for (double v : r) sum += rho(spec.rho0, v / s);
  CHECK(std::abs(sum / 47.0 - 0.5) <= 1e-8);
}

TEST_CASE("m_scale is scale equivariant") {
  auto r = oracle::normal_draws(150, 77);
  const double s = m_scale(r, MScaleSpec{});
  for (double lambda : {3.7, -3.7, 1e-3, 250.0}) {
    std::vector<double> scaled(r.size());
    std::transform(r.begin(), r.end(), scaled.begin(), [&](double v) { return lambda * v; });
    CHECK(std::abs(m_scale(scaled, MScaleSpec{}) - std::abs(lambda) * s) <= 1e-8 * std::max(1.0, std::abs(lambda)));
  }
}

TEST_CASE("s_estimator recovers an exact fit with zero scale") {
  const auto smp = model1(1);
  const auto d = model1_design(smp, 5);
  Eigen::VectorXd truth(d.cols());
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  for (auto& v : truth) v = z(rng);
  const Eigen::VectorXd y = d.matrix * truth;
  const auto s = s_estimator(d, y, spec_for(d), SolverConfig{});
  CHECK(s.scale == 0.0);
  CHECK((y - d.matrix * s.coefficients).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("s_estimator beats least squares and is regression equivariant") {
  const auto smp = model1(2);
  const auto d = model1_design(smp, 4);
  const auto spec = spec_for(d);
  SolverConfig cfg;
  cfg.seed = 99;
  const auto s = s_estimator(d, smp.y, spec, cfg);
  const Eigen::VectorXd ls = least_squares(d.matrix, smp.y);
  CHECK(s.scale <= m_scale(Eigen::VectorXd(smp.y - d.matrix * ls), spec) + 1e-12);
  CHECK(std::abs(m_scale(Eigen::VectorXd(smp.y - d.matrix * s.coefficients), spec) - s.scale) <= 1e-8);
  for (std::size_t i = 1; i < s.scale_trace.size(); ++i) CHECK(s.scale_trace[i] <= s.scale_trace[i - 1]);

  const double a0 = 1.7;
  const Eigen::Vector2d gamma(-0.4, 2.5);
  const Eigen::VectorXd y2 = smp.y.array() + a0 + (smp.Z * gamma).array();
  const auto s2 = s_estimator(d, y2, spec, cfg);
  Eigen::VectorXd expected = s.coefficients;
  expected[0] += a0;
  expected.segment(1, 2) += gamma;
  CHECK((s2.coefficients - expected).cwiseAbs().maxCoeff() <= 1e-6);
  CHECK(std::abs(s2.scale - s.scale) <= 1e-6 * s.scale);
}

TEST_CASE("s_estimator is deterministic and row-order invariant") {
  const auto smp = model1(3);
  const auto d = model1_design(smp, 5);
  SolverConfig cfg;
  const auto a = s_estimator(d, smp.y, spec_for(d), cfg);
  const auto b = s_estimator(d, smp.y, spec_for(d), cfg);
  CHECK(a.coefficients == b.coefficients);
  CHECK(a.scale == b.scale);

  std::vector<int> perm(100);
  for (int i = 0; i < 100; ++i) perm[static_cast<std::size_t>(i)] = (i * 37) % 100;
  DesignMatrix dp = d;
  Eigen::VectorXd yp(100);
  for (int i = 0; i < 100; ++i) {
    dp.matrix.row(i) = d.matrix.row(perm[static_cast<std::size_t>(i)]);
    yp[i] = smp.y[perm[static_cast<std::size_t>(i)]];
  }
  const auto c = s_estimator(dp, yp, spec_for(dp), cfg);
  CHECK((c.coefficients - a.coefficients).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK(std::abs(c.scale - a.scale) <= 1e-8);
}

TEST_CASE("s_estimator input errors") {
  const auto smp = model1(4, 12);
  const auto d = model1_design(smp, 6);  // 1 + 2 + 10 = 13 columns > 12 rows
  CHECK_THROWS_AS(s_estimator(d, smp.y, spec_for(d), SolverConfig{}), Error);

  const auto big = model1(5);
  auto dd = model1_design(big, 4);
  dd.matrix.col(2) = dd.matrix.col(1);  // duplicate column
  CHECK_THROWS_AS(s_estimator(dd, big.y, spec_for(dd), SolverConfig{}), Error);
}

TEST_CASE("m_step: stationary start, monotone objective, errors") {
  const auto smp = model1(6);
  const auto d = model1_design(smp, 5);
  const auto rho1 = RhoFamily::tukey(kTukeyEfficiencyC);
  {
    Eigen::VectorXd truth = Eigen::VectorXd::LinSpaced(d.cols(), -1.0, 1.0);
    const Eigen::VectorXd y = d.matrix * truth;
    const auto r = m_step(d, y, 0.3, rho1, truth, SolverConfig{});
    CHECK(r.iterations <= 1);
    CHECK((r.coefficients - truth).cwiseAbs().maxCoeff() <= 1e-10);
  }
  const auto s = s_estimator(d, smp.y, spec_for(d), SolverConfig{});
  const auto m = m_step(d, smp.y, s.scale, rho1, s.coefficients, SolverConfig{});
  CHECK(m.converged);
  CHECK(m.objective <= m_objective(d, smp.y, s.coefficients, s.scale, rho1));
  for (std::size_t i = 1; i < m.objective_trace.size(); ++i) {
    CHECK(m.objective_trace[i] <= m.objective_trace[i - 1]);
  }
  CHECK_THROWS_AS(m_step(d, smp.y, 0.0, rho1, s.coefficients, SolverConfig{}), Error);
  CHECK_THROWS_AS(m_step(d, smp.y, 1.0, RhoFamily::square(), s.coefficients, SolverConfig{}), Error);
  // a tiny scale rejects every observation
  const Eigen::VectorXd far = s.coefficients.array() + 1e3;
  CHECK_THROWS_AS(m_step(d, smp.y, 1e-9, rho1, far, SolverConfig{}), Error);
}

TEST_CASE("m_step agrees with a Nelder-Mead minimizer from the same start") {
  const auto smp = model1(7);
  const auto d = model1_design(smp, 4);
  const auto rho1 = RhoFamily::tukey(kTukeyEfficiencyC);
  const auto s = s_estimator(d, smp.y, spec_for(d), SolverConfig{});
  const auto m = m_step(d, smp.y, s.scale, rho1, s.coefficients, SolverConfig{});
  const auto obj = [&](const Eigen::VectorXd& b) { return m_objective(d, smp.y, b, s.scale, rho1); };
  const Eigen::VectorXd nm = oracle::nelder_mead(obj, s.coefficients, 0.05);
  CHECK(std::abs(m.objective - obj(nm)) <= 1e-3);
}

}
