#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "robplam/rho.hpp"

using namespace robplam;

TEST_SUITE("rho") {

TEST_CASE("bisquare values from hand evaluation") {
  const auto t0 = RhoFamily::tukey(kTukeyScaleC);
  CHECK(rho(t0, 0.0) == 0.0);
  CHECK(rho(t0, 2.0) == 1.0);
  const auto t2 = RhoFamily::tukey(2.0);
  CHECK(rho(t2, 1.0) == doctest::Approx(0.578125).epsilon(1e-15));
  CHECK(psi(RhoFamily::tukey(kTukeyEfficiencyC), 0.0) == 0.0);
  CHECK(psi(t2, 2.0) == 0.0);
  CHECK(psi(t2, 1.0) == doctest::Approx(0.84375).epsilon(1e-15));
  CHECK(weight(t2, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(weight(t2, 3.0) == 0.0);
  CHECK(weight(t2, 1.0) == doctest::Approx(0.84375).epsilon(1e-15));
  CHECK(psi_prime(t2, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(psi_prime(t2, 2.5) == 0.0);
}

TEST_CASE("symmetry, bounds and finite-difference derivatives") {
  for (double c : {kTukeyScaleC, 2.0, kTukeyEfficiencyC}) {
    const auto f = RhoFamily::tukey(c);
    const double h = 1e-5;
    for (int i = -400; i <= 400; ++i) {
      const double t = 2.0 * c * i / 400.0;
      CHECK(rho(f, -t) == rho(f, t));
      CHECK(psi(f, -t) == -psi(f, t));
      CHECK(rho(f, t) >= 0.0);
      CHECK(rho(f, t) <= 1.0);
      if (std::abs(std::abs(t) - c) < 2 * h) continue;  // kink of psi' at the rejection point
      const double fd_psi = (rho(f, t + h) - rho(f, t - h)) / (2 * h);
      const double fd_dpsi = (psi(f, t + h) - psi(f, t - h)) / (2 * h);
      CHECK(std::abs(psi(f, t) - fd_psi) <= 1e-6);
      CHECK(std::abs(psi_prime(f, t) - fd_dpsi) <= 1e-6);
      if (t != 0.0) CHECK(std::abs(weight(f, t) - psi(f, t) / t) <= 1e-12);
    }
  }
}

TEST_CASE("rho is non-decreasing on the positive axis and flat beyond c") {
  const auto f = RhoFamily::tukey(kTukeyEfficiencyC);
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = 3.0 * kTukeyEfficiencyC * i / 1000.0;
    CHECK(rho(f, t) >= prev);
    prev = rho(f, t);
    if (t >= kTukeyEfficiencyC) {
      CHECK(rho(f, t) == 1.0);
      CHECK(psi(f, t) == 0.0);
    }
  }
}

TEST_CASE("zeta(t) = t psi(t) is bounded and peaks inside the rejection region") {
  const auto f = RhoFamily::tukey(kTukeyScaleC);
  double best = 0.0, arg = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = 2.0 * kTukeyScaleC * i / 4000.0;
    const double z = t * psi(f, t);
    if (z > best) {
      best = z;
      arg = t;
    }
  }
  CHECK(arg < kTukeyScaleC);
  CHECK(std::isfinite(best));
}

TEST_CASE("Fisher consistency of the scale constant by quadrature") {
  CHECK(std::abs(oracle::normal_rho_mean(kTukeyScaleC) - 0.5) <= 5e-3);
}

TEST_CASE("square family is the unbounded least-squares loss") {
  const auto s = RhoFamily::square();
  CHECK_FALSE(s.bounded());
  CHECK(rho(s, 3.0) == 9.0);
  CHECK(psi(s, 3.0) == 6.0);
  CHECK(psi_prime(s, 3.0) == 2.0);
}

}
