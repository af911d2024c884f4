#pragma once

#include <complex>

namespace gramlab {

enum class ZMethod { riemann_siegel, euler_maclaurin };

const char* to_string(ZMethod m);

/// Hardy's Z(t) with an error estimate.
struct ZEval {
  double t = 0;
  double z = 0;
  double err_bound = 0;         ///< truncation_bound plus a rounding estimate
  double truncation_bound = 0;  ///< analytic remainder of the method alone
  ZMethod method = ZMethod::riemann_siegel;
};

/// zeta(1/2 + it) = A(t) + i B(t).
struct ZetaHalfLine {
  double t = 0;
  double a = 0;
  double b = 0;
};

struct EulerMaclaurinResult {
  std::complex<double> value;
  double err_bound = 0;
  int terms = 0;        ///< length of the direct sum
  int corrections = 0;  ///< number of Bernoulli terms
};

inline constexpr double kRiemannSiegelFloor = 10.0;
inline constexpr double kSwitchover = 200.0;

/// Z(t): Euler-Maclaurin below t = 200, Riemann-Siegel with corrections
/// C0..C4 from there on (Gabcke's remainder bound applies from t = 200).
/// Throws DomainError for t <= 0.
ZEval hardy_z(double t);

/// Riemann-Siegel evaluation only; requires t >= 10.
ZEval hardy_z_riemann_siegel(double t);

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)) through Euler-Maclaurin.
ZEval hardy_z_euler_maclaurin(double t, double target_err = 1e-12);

ZetaHalfLine zeta_half_line(double t);

/// zeta(sigma + it) by Euler-Maclaurin summation with a Bernoulli-tail bound.
/// Valid for sigma in [0.4, 3], 0 <= t <= 5e4, target_err >= 1e-13.
/// Throws PreconditionError outside that box, DomainError at the pole and
/// PrecisionError when rounding alone exceeds target_err.
EulerMaclaurinResult zeta_euler_maclaurin(double sigma, double t, double target_err);

}  // namespace gramlab
