#include "gramlab/theta.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"

namespace gramlab {

namespace {

// Coefficients c_k of the theta series, (1 - 2^{1-2k}) |B_2k| / (4k(2k-1)),
// multiplying t^{-(2k-1)}; the last entry is only used for the error bound.
constexpr std::array<long double, 6> kSeries = {
    1.0L / 48.0L,
    7.0L / 5760.0L,
    31.0L / 80640.0L,
    127.0L / 430080.0L,
    511.0L / 1216512.0L,
    // (1 - 2^-11) (691/2730) / 264
    (2047.0L / 2048.0L) * (691.0L / 2730.0L) / 264.0L,
};
constexpr int kUsedTerms = 5;

void require_domain(long double t) {
  if (!(t >= kThetaFloor)) {
    throw DomainError("theta: t = " + std::to_string(static_cast<double>(t)) +
                      " is below the floor t = 7");
  }
}

long double theta_series(long double t) {
  const long double two_pi = 2 * kPiL;
  long double v = t / 2 * std::log(t / two_pi) - t / 2 - kPiL / 8;
  const long double inv = 1 / t;
  const long double inv2 = inv * inv;
  long double p = inv;
  for (int k = 0; k < kUsedTerms; ++k) {
    v += kSeries[k] * p;
    p *= inv2;
  }
  // exponentially small part of Im log Gamma(1/4 + it/2)
  v += std::atan(std::exp(-kPiL * t)) / 2;
  return v;
}

long double theta_d1(long double t) {
  long double v = std::log(t / (2 * kPiL)) / 2;
  const long double inv = 1 / t;
  const long double inv2 = inv * inv;
  long double p = inv2;
  for (int k = 1; k <= kUsedTerms; ++k) {
    v -= kSeries[k - 1] * (2 * k - 1) * p;
    p *= inv2;
  }
  const long double e = std::exp(-kPiL * t);
  v -= kPiL / 2 * e / (1 + e * e);
  return v;
}

long double theta_d2(long double t) {
  const long double inv = 1 / t;
  const long double inv2 = inv * inv;
  long double v = inv / 2;
  long double p = inv2 * inv;
  for (int k = 1; k <= kUsedTerms; ++k) {
    v += kSeries[k - 1] * (2 * k - 1) * (2 * k) * p;
    p *= inv2;
  }
  v += kPiL * kPiL / 2 * std::exp(-kPiL * t);
  return v;
}

double series_error(double t) {
  const double tail = static_cast<double>(kSeries[kUsedTerms]) / std::pow(t, 2 * kUsedTerms + 1);
  const double value = std::abs(t / 2 * std::log(t / (2 * kPi)));
  return 2 * tail + 4 * std::numeric_limits<long double>::epsilon() * value;
}

// Seed for Newton: fixed-point iteration on the leading terms,
// t <- 2((n-1)pi + pi/8 + t/2) / ln(t / 2pi).
long double gram_seed(std::int64_t n) {
  const long double target = (static_cast<long double>(n) - 1) * kPiL;
  long double t = std::max<long double>(20.0L, 2 * kPiL * n / std::log(n + 2.0L));
  for (int i = 0; i < 6; ++i) {
    const long double next = 2 * (target + kPiL / 8 + t / 2) / std::log(t / (2 * kPiL));
    if (!std::isfinite(next) || next <= kThetaFloor) break;
    t = next;
  }
  return t;
}

long double gram_bisect(std::int64_t n) {
  const long double target = (static_cast<long double>(n) - 1) * kPiL;
  long double lo = kThetaFloor;
  long double hi = 2 * lo;
  while (theta_series(hi) < target) {
    lo = hi;
    hi *= 2;
    if (!std::isfinite(hi)) throw ConvergenceError("gram_point: no bracket for n = " + std::to_string(n));
  }
  for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<long double>::epsilon() * hi; ++i) {
    const long double mid = (lo + hi) / 2;
    (theta_series(mid) < target ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

long double theta_extended(long double t) {
  require_domain(t);
  return theta_series(t);
}

ThetaEval theta(double t) {
  require_domain(t);
  ThetaEval out;
  out.t = t;
  out.value = static_cast<double>(theta_series(t));
  out.d1 = static_cast<double>(theta_d1(t));
  out.d2 = static_cast<double>(theta_d2(t));
  out.err_bound = series_error(t);
  return out;
}

double theta_derivative(double t, int order) {
  if (order != 1 && order != 2) {
    throw PreconditionError("theta_derivative: unsupported order " + std::to_string(order));
  }
  require_domain(t);
  return static_cast<double>(order == 1 ? theta_d1(t) : theta_d2(t));
}

double theta_loggamma(double t) {
  if (!(t > 0)) throw DomainError("theta_loggamma: t must be positive");
  using cplx = std::complex<long double>;
  // Bernoulli numbers B_2 .. B_20
  static constexpr std::array<long double, 10> bern = {
      1.0L / 6,       -1.0L / 30,       1.0L / 42,  -1.0L / 30, 5.0L / 66,
      -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330};
  const cplx z0(0.25L, static_cast<long double>(t) / 2);
  constexpr int shift = 16;
  long double arg_sum = 0;
  for (int j = 0; j < shift; ++j) arg_sum += std::arg(z0 + static_cast<long double>(j));
  const cplx z = z0 + static_cast<long double>(shift);
  cplx lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * kPiL);
  cplx zp = z;
  const cplx z2 = z * z;
  for (std::size_t k = 1; k <= bern.size(); ++k) {
    lg += bern[k - 1] / (static_cast<long double>(2 * k) * (2 * k - 1) * zp);
    zp *= z2;
  }
  return static_cast<double>(lg.imag() - arg_sum - static_cast<long double>(t) / 2 * std::log(kPiL));
}

long double gram_point_extended(std::int64_t n) {
  if (n < 0) throw PreconditionError("gram_point: n must be non-negative");
  const long double target = (static_cast<long double>(n) - 1) * kPiL;
  long double t = gram_seed(n);
  for (int i = 0; i < 40; ++i) {
    const long double step = (theta_series(t) - target) / theta_d1(t);
    if (!std::isfinite(step)) break;
    long double next = t - step;
    if (next <= kThetaFloor) next = (t + kThetaFloor) / 2;
    if (std::abs(next - t) <= 2 * std::numeric_limits<long double>::epsilon() * t) {
      return next;
    }
    t = next;
  }
  // Newton stalled or oscillated; the bracket search cannot miss the root.
  const long double b = gram_bisect(n);
  if (std::abs(theta_series(b) - target) > 1e-9L) {
    throw ConvergenceError("gram_point: bisection failed for n = " + std::to_string(n));
  }
  return b;
}

GramPoint gram_point(std::int64_t n) {
  return GramPoint{n, static_cast<double>(gram_point_extended(n))};
}

double gram_residual(const GramPoint& g) {
  const long double target = (static_cast<long double>(g.n) - 1) * kPiL;
  return static_cast<double>(std::abs(theta_series(g.t) - target));
}

double gram_spacing_bound(std::int64_t N, std::int64_t M) {
  const double ln_n = std::log(static_cast<double>(N));
  return 3.0 * static_cast<double>(M) / (static_cast<double>(N) * ln_n * ln_n);
}

double gram_spacing_report(std::int64_t N, std::int64_t M, std::int64_t m) {
  if (m == 0) return 0.0;
  if (N < 100 || m < 0 || M < 1 || m > M) {
    throw PreconditionError("gram_spacing_report: need N >= 100 and 1 <= m <= M");
  }
  const long double step = kPiL * m / theta_d1(gram_point_extended(N));
  long double worst = 0;
  for (std::int64_t n = N + 1; n <= N + M; ++n) {
    const long double gap = gram_point_extended(n + m) - gram_point_extended(n);
    worst = std::max(worst, std::abs(gap - step));
  }
  return static_cast<double>(worst);
}

std::int64_t gram_index_below(double t) {
  require_domain(t);
  auto n = static_cast<std::int64_t>(std::floor(theta_series(t) / kPiL)) + 1;
  if (n < 0) return -1;
  while (n >= 0 && gram_point(n).t > t) --n;
  while (gram_point(n + 1).t <= t) ++n;
  return n;
}

}  // namespace gramlab
