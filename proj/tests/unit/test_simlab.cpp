#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "robplam/error.hpp"
#include "robplam/simlab.hpp"

using namespace robplam;

namespace {

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::ArrayXd da = a.array() - a.mean();
  const Eigen::ArrayXd db = b.array() - b.mean();
  return (da * db).sum() / std::sqrt(da.square().sum() * db.square().sum());
}

}  // namespace

TEST_SUITE("simlab") {

TEST_CASE("true curves integrate to zero") {
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(oracle::integrate([j](double x) { return truth::eta(j, x); }, 0.0, 1.0)) <= 1e-12);
  }
  CHECK(truth::eta1(0.5) == doctest::Approx(2.0 - 4.0 / std::numbers::pi));
  CHECK(truth::eta2(0.0) == doctest::Approx(1.0 - (std::numbers::e - 1.0)));
}

TEST_CASE("covariate designs") {
  std::mt19937_64 rng(1);
  const auto m1 = generate(1, 5000, rng);
  CHECK(std::abs(correlation(m1.Z.col(0), m1.X.col(0))) < 0.05);
  CHECK((m1.X.array() >= 0.0).all());
  CHECK((m1.X.array() <= 1.0).all());

  const auto m2 = generate(2, 5000, rng);
  CHECK(std::abs(correlation(m2.Z.col(0), m2.X.col(0)) - 0.7) < 0.03);
  CHECK(std::abs(correlation(m2.Z.col(1), m2.X.col(1))) < 0.05);

  const auto m4 = generate(4, 2000, rng);
  std::set<double> s1(m4.Z.col(0).data(), m4.Z.col(0).data() + 2000);
  std::set<double> s2(m4.Z.col(1).data(), m4.Z.col(1).data() + 2000);
  for (double v : s1) CHECK(std::abs(3.0 * v - std::round(3.0 * v)) < 1e-12);
  for (double v : s2) CHECK(std::abs(5.0 * v - std::round(5.0 * v)) < 1e-12);
  CHECK(s1.size() == 4);
  CHECK(*s2.rbegin() <= 1.0);

  const auto m5 = generate(5, 2000, rng);
  CHECK(((m5.Z.col(0) + m5.Z.col(1)).array() <= 1.0 + 1e-12).all());

  const auto m6 = generate(6, 2000, rng);
  for (int i = 0; i < 2000; ++i) {
    const double twice = 2.0 * m6.Z(i, 1);
    const bool ind = m6.X(i, 0) < 2.0 / 3.0;
    CHECK((twice == (ind ? 1.0 : 0.0) || twice == (ind ? 2.0 : 1.0)));
  }
  CHECK_THROWS_AS(generate(7, 10, rng), Error);
}

TEST_CASE("copula latent correlation") {
  CHECK(copula_latent_correlation(0.0) == 0.0);
  CHECK(copula_latent_correlation(1.0) == doctest::Approx(1.0));
  const double r = copula_latent_correlation(0.7);
  CHECK(6.0 / std::numbers::pi * std::asin(r / 2.0) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("response follows the model") {
  std::mt19937_64 rng(2);
  const auto s = generate(1, 4000, rng);
  const Eigen::VectorXd e = s.y - s.signal;
  CHECK(std::abs(e.mean()) < 0.01);
  CHECK(std::abs(std::sqrt(e.squaredNorm() / 4000.0) - truth::kSigma) < 0.01);
  for (int i = 0; i < 10; ++i) {
    const double sig = 3.0 * s.Z(i, 0) + 3.0 * s.Z(i, 1) + truth::eta1(s.X(i, 0)) + truth::eta2(s.X(i, 1));
    CHECK(s.signal[i] == doctest::Approx(sig));
  }
}

TEST_CASE("contamination schemes") {
  std::mt19937_64 rng(3);
  const auto clean = generate(1, 10000, rng);
  const auto c0 = contaminate(clean, Contamination::C0, rng);
  CHECK(c0.y == clean.y);
  CHECK(c0.Z == clean.Z);
  CHECK(c0.contaminated.empty());

  const auto c1 = contaminate(clean, Contamination::C1, rng);
  CHECK(std::abs(static_cast<double>(c1.contaminated.size()) / 10000.0 - 0.1) < 0.015);

  const auto c2 = contaminate(clean, Contamination::C2, rng);
  const double frac = static_cast<double>(c2.contaminated.size()) / 10000.0;
  CHECK(std::abs(frac - 0.15) < 0.015);
  for (int i : c2.contaminated) CHECK(std::abs(c2.y[i] - clean.signal[i] - 15.0) < 1.0);

  const auto c3 = contaminate(clean, Contamination::C3, rng);
  CHECK(c3.contaminated.size() == 9);
  int changed = 0;
  for (int i = 0; i < 10000; ++i) changed += (c3.Z.row(i) != clean.Z.row(i)) ? 1 : 0;
  CHECK(changed == 9);
  for (int i : c3.contaminated) CHECK(c3.Z(i, 0) == 20.0);
  CHECK(c3.y == clean.y);
}

TEST_CASE("C3 with every point in one cell replaces a single row") {
  std::mt19937_64 rng(4);
  auto s = generate(1, 50, rng);
  s.X = s.X * 0.3;
  const auto c3 = contaminate(s, Contamination::C3, rng);
  REQUIRE(c3.contaminated.size() == 1);
  CHECK(c3.contaminated[0] == 0);
}

TEST_CASE("integrated squared error") {
  const auto id = [](double x) { return x; };
  const auto r0 = ise(id, id, 1000, 50);
  CHECK(r0.ise == 0.0);
  CHECK(r0.ise_trim == 0.0);
  const auto r1 = ise([](double x) { return x + 0.1; }, id, 1000, 50);
  CHECK(r1.ise == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(r1.ise_trim == doctest::Approx(0.01).epsilon(1e-12));

  // brute force on a small grid
  double full = 0.0, trim = 0.0;
  for (int s = 1; s <= 10; ++s) {
    const double x = (s - 1) / 9.0;
    const double d = std::sin(x) - x * x;
    full += d * d;
    if (s > 2 && s <= 8) trim += d * d;
  }
  const auto r2 = ise([](double x) { return std::sin(x); }, [](double x) { return x * x; }, 10, 2);
  CHECK(r2.ise == doctest::Approx(full / 10.0).epsilon(1e-14));
  CHECK(r2.ise_trim == doctest::Approx(trim / 6.0).epsilon(1e-14));
  CHECK_THROWS_AS(ise(id, id, 10, 5), Error);
}

TEST_CASE("upper trimmed mean") {
  std::vector<double> v;
  for (int i = 1; i <= 20; ++i) v.push_back(i);
  CHECK(upper_trimmed_mean(v) == doctest::Approx(10.0));  // drops 20
  v.push_back(1000.0);                                      // N = 21 drops ceil(1.05) = 2
  CHECK(upper_trimmed_mean(v) == doctest::Approx(10.0));
  CHECK(upper_trimmed_mean({5.0}) == 5.0);
}

TEST_CASE("summaries") {
  ReplicationRecord r;
  r.ok = true;
  r.method = Method::MM;
  r.selected_k = 5;
  r.beta_hat = {3.1, 2.8};
  r.ise = {0.2, 0.3};
  std::vector<ReplicationRecord> one{r};
  const auto s1 = summarize(Method::MM, one);
  CHECK(s1.n_ok == 1);
  CHECK(s1.bias[0] == doctest::Approx(0.1));
  CHECK(s1.mse[0] == doctest::Approx(0.01));
  CHECK(s1.sd[0] == 0.0);
  CHECK(s1.medise[1] == 0.3);
  CHECK(s1.mise5[1] == 0.3);
  CHECK(s1.k_proportions.at(5) == 1.0);

  std::vector<ReplicationRecord> many;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd(3.2, 0.5);
  for (int i = 0; i < 200; ++i) {
    r.beta_hat = {nd(rng), nd(rng)};
    r.selected_k = 4 + i % 2;
    many.push_back(r);
  }
  ReplicationRecord bad;
  bad.method = Method::MM;
  many.push_back(bad);
  const auto s = summarize(Method::MM, many);
  CHECK(s.n_ok == 200);
  CHECK(s.n_failed == 1);
  for (int j = 0; j < 2; ++j) {
    const double n = 200.0;
    CHECK(s.mse[j] == doctest::Approx(s.bias[j] * s.bias[j] + s.sd[j] * s.sd[j] * (n - 1) / n).epsilon(1e-10));
  }
  CHECK(s.k_proportions.at(4) == 0.5);
  CHECK(summarize(Method::LS, many).n_ok == 0);
}

TEST_CASE("experiments are deterministic and thread independent") {
  SimulationSpec spec;
  spec.model = 1;
  spec.contamination = Contamination::C2;
  spec.n = 60;
  spec.replications = 3;
  spec.k_grid = {4, 5};
  spec.solver.n_sub = 40;
  spec.threads = 1;
  const auto a = run_experiment(spec, {Method::LS, Method::MM});
  spec.threads = 3;
  const auto b = run_experiment(spec, {Method::LS, Method::MM});
  REQUIRE(a.records.size() == 6);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].ok);
    CHECK(a.records[i].beta_hat == b.records[i].beta_hat);
    CHECK(a.records[i].ise == b.records[i].ise);
    CHECK(a.records[i].curves[0] == b.records[i].curves[0]);
  }
  CHECK(child_seed(1, 0) != child_seed(1, 1));
  CHECK(child_seed(1, 0) != child_seed(2, 0));
  CHECK(child_seed(7, 3) == child_seed(7, 3));

  spec.replications = 0;
  CHECK_THROWS_AS(run_experiment(spec, {Method::LS}), Error);
}

}
