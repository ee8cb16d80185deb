#include "robplam/rho.hpp"

#include <cmath>

namespace robplam {

double rho(const RhoFamily& f, double t) {
  if (f.kind == RhoKind::Square) return t * t;
  const double u = t / f.c;
  const double u2 = u * u;
  if (u2 >= 1.0) return 1.0;
  const double v = 1.0 - u2;
  return 1.0 - v * v * v;
}

double psi(const RhoFamily& f, double t) {
  if (f.kind == RhoKind::Square) return 2.0 * t;
  const double u = t / f.c;
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  const double v = 1.0 - u2;
  return 6.0 * t / (f.c * f.c) * v * v;
}

double psi_prime(const RhoFamily& f, double t) {
  if (f.kind == RhoKind::Square) return 2.0;
  const double u = t / f.c;
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  // d/dt [6t/c^2 (1-u^2)^2] = 6/c^2 (1-u^2)(1-5u^2)
  return 6.0 / (f.c * f.c) * (1.0 - u2) * (1.0 - 5.0 * u2);
}

double weight(const RhoFamily& f, double t) {
  if (f.kind == RhoKind::Square) return 2.0;
  const double u = t / f.c;
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  const double v = 1.0 - u2;
  return 6.0 / (f.c * f.c) * v * v;
}

}  // namespace robplam
