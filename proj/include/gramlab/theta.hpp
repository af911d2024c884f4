#pragma once

#include <cstdint>

namespace gramlab {

/// Riemann-Siegel theta and its first two derivatives at one height.
struct ThetaEval {
  double t = 0;
  double value = 0;
  double d1 = 0;
  double d2 = 0;
  double err_bound = 0;  ///< truncation bound of the asymptotic series
};

/// A Gram point t_n, the root of theta(t) = (n - 1) pi on the branch t > 7.
struct GramPoint {
  std::int64_t n = 0;
  double t = 0;
};

inline constexpr double kThetaFloor = 7.0;

/// theta(t) from the Stirling series through 1/t^9 plus the e^{-pi t} term.
/// Throws DomainError for t < 7.
ThetaEval theta(double t);

/// Same series evaluated in extended precision. Used wherever theta enters a
/// phase that is later reduced modulo 2 pi.
long double theta_extended(long double t);

/// theta via the continuous branch of Im log Gamma(1/4 + it/2); valid for any t > 0.
/// Slower than theta(); serves small heights and cross-checks.
double theta_loggamma(double t);

/// theta'(t) for order 1, theta''(t) for order 2. Throws DomainError for
/// t < 7 and PreconditionError for any other order.
double theta_derivative(double t, int order);

/// Solves theta(t) = (n - 1) pi by Newton from an asymptotic seed, falling
/// back to bisection. Throws PreconditionError for n < 0 and
/// ConvergenceError if both stages fail.
GramPoint gram_point(std::int64_t n);

/// Extended-precision Gram point, for callers that need the root beyond binary64.
long double gram_point_extended(std::int64_t n);

/// |theta(t) - (n - 1) pi| evaluated in extended precision.
double gram_residual(const GramPoint& g);

/// Largest |t_{n+m} - t_n - pi m / theta'(t_N)| over N < n <= N + M.
/// m = 0 returns 0. Requires N >= 100 and m <= M.
double gram_spacing_report(std::int64_t N, std::int64_t M, std::int64_t m);

/// The spacing-deviation bound 3M / (N ln^2 N).
double gram_spacing_bound(std::int64_t N, std::int64_t M);

/// Index of the last Gram point at or below t (t >= t_0), i.e. floor(theta(t)/pi) + 1.
std::int64_t gram_index_below(double t);

}  // namespace gramlab
