#pragma once

namespace robplam {

enum class RhoKind {
  TukeyBisquare,
  Square,  // rho(t) = t^2, unbounded; only used by the least-squares path
};

/// A loss function together with its tuning constant.
///
/// For the bisquare family rho(t) = min(1 - (1 - (t/c)^2)^3, 1), so rho is
/// bounded by 1 and its derivative vanishes outside [-c, c].
struct RhoFamily {
  RhoKind kind = RhoKind::TukeyBisquare;
  double c = 4.685;

  static constexpr RhoFamily tukey(double c) { return {RhoKind::TukeyBisquare, c}; }
  static constexpr RhoFamily square() { return {RhoKind::Square, 1.0}; }

  constexpr bool bounded() const { return kind == RhoKind::TukeyBisquare; }
};

/// Tuning constant giving a Fisher-consistent, 50% breakdown M-scale with b = 1/2.
inline constexpr double kTukeyScaleC = 1.54764;
/// Tuning constant giving 95% asymptotic efficiency under normal errors.
inline constexpr double kTukeyEfficiencyC = 4.685;
inline constexpr double kScaleB = 0.5;

double rho(const RhoFamily& f, double t);
double psi(const RhoFamily& f, double t);
double psi_prime(const RhoFamily& f, double t);
/// psi(t)/t, extended continuously by psi'(0) at the origin.
double weight(const RhoFamily& f, double t);

}  // namespace robplam
