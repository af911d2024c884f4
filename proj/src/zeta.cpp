#include "gramlab/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"
#include "gramlab/theta.hpp"

namespace gramlab {

namespace {

#include "rs_coefficients.inc"

// Precomputed log k and k^{-1/2} for the main sum; covers t up to 2 pi 4096^2 ~ 1e8.
struct MainSumTables {
  static constexpr std::size_t kSize = 4097;
  std::vector<long double> log_k;
  std::vector<double> rsqrt_k;

  MainSumTables() : log_k(kSize), rsqrt_k(kSize) {
    for (std::size_t k = 1; k < kSize; ++k) {
      log_k[k] = std::log(static_cast<long double>(k));
      rsqrt_k[k] = static_cast<double>(1 / std::sqrt(static_cast<long double>(k)));
    }
  }
};

const MainSumTables& tables() {
  static const MainSumTables t;
  return t;
}

template <std::size_t N>
long double horner(const long double (&c)[N], long double x) {
  long double acc = 0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Gabcke's remainder constant for four correction terms, t >= 200.
constexpr double kGabckeD4 = 0.017;

long double theta_any(long double t) {
  return t >= kThetaFloor ? theta_extended(t) : static_cast<long double>(theta_loggamma(static_cast<double>(t)));
}

// B_2k / (2k)! for k = 1..kMaxCorrections, from zeta(2k).
constexpr int kMaxCorrections = 60;

const std::array<double, kMaxCorrections + 2>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kMaxCorrections + 2> b{};
    const long double pi2 = kPiL * kPiL;
    const std::array<long double, 5> exact = {0, pi2 / 6, pi2 * pi2 / 90, pi2 * pi2 * pi2 / 945,
                                              pi2 * pi2 * pi2 * pi2 / 9450};
    for (int k = 1; k <= kMaxCorrections + 1; ++k) {
      long double z = 0;
      if (k < static_cast<int>(exact.size())) {
        z = exact[k];
      } else {
        // zeta(2k), k >= 5: direct sum plus the integral tail
        constexpr int cut = 64;
        for (int n = cut - 1; n >= 1; --n) z += std::pow(static_cast<long double>(n), -2.0L * k);
        z += std::pow(static_cast<long double>(cut), 1.0L - 2 * k) / (2 * k - 1) +
             std::pow(static_cast<long double>(cut), -2.0L * k) / 2;
      }
      const long double mag = 2 * z / std::pow(2 * kPiL, 2.0L * k);
      b[k] = static_cast<double>(k % 2 == 1 ? mag : -mag);
    }
    return b;
  }();
  return table;
}

}  // namespace

const char* to_string(ZMethod m) {
  return m == ZMethod::riemann_siegel ? "riemann_siegel" : "euler_maclaurin";
}

ZEval hardy_z_riemann_siegel(double t) {
  if (!(t >= kRiemannSiegelFloor)) {
    throw DomainError("hardy_z_riemann_siegel: t = " + std::to_string(t) + " below 10");
  }
  const auto& tab = tables();
  const long double tl = t;
  const long double a2 = tl / (2 * kPiL);
  const long double a = std::sqrt(a2);
  const auto n_terms = static_cast<std::size_t>(std::floor(a));
  const long double frac = a - static_cast<long double>(n_terms);
  const long double th = theta_extended(tl);

  CompensatedSum<double> main;
  double abs_sum = 0;
  for (std::size_t k = 1; k <= n_terms; ++k) {
    const long double lk = k < MainSumTables::kSize ? tab.log_k[k] : std::log(static_cast<long double>(k));
    const double w = k < MainSumTables::kSize ? tab.rsqrt_k[k] : 1.0 / std::sqrt(static_cast<double>(k));
    const double phase = static_cast<double>(reduce_angle(th - tl * lk));
    main.add(w * std::cos(phase));
    abs_sum += w;
  }

  const long double x = frac - 0.5L;
  const long double inv_a = 1 / a;
  const long double corr = horner(kRsC0, x) +
                           inv_a * (horner(kRsC1, x) +
                                    inv_a * (horner(kRsC2, x) +
                                             inv_a * (horner(kRsC3, x) + inv_a * horner(kRsC4, x))));
  const long double sign = (n_terms % 2 == 1) ? 1.0L : -1.0L;  // (-1)^{N-1}
  const long double rem = sign * corr / std::sqrt(a);

  ZEval out;
  out.t = t;
  out.z = static_cast<double>(2 * static_cast<long double>(main.value()) + rem);
  out.method = ZMethod::riemann_siegel;
  out.truncation_bound = kGabckeD4 * std::pow(t, -2.75);
  const double eps = std::numeric_limits<double>::epsilon();
  const double phase_err = static_cast<double>(std::numeric_limits<long double>::epsilon() *
                                               (std::abs(th) + tl * std::log(a + 1)));
  out.err_bound = out.truncation_bound + (8 * eps + 2 * phase_err) * (2 * abs_sum + 1);
  return out;
}

EulerMaclaurinResult zeta_euler_maclaurin(double sigma, double t, double target_err) {
  if (!(sigma >= 0.4 && sigma <= 3.0) || !(t >= 0.0 && t <= 5e4)) {
    throw PreconditionError("zeta_euler_maclaurin: (sigma, t) outside [0.4, 3] x [0, 5e4]");
  }
  if (!(target_err >= 1e-13)) {
    throw PreconditionError("zeta_euler_maclaurin: target_err below 1e-13");
  }
  if (sigma == 1.0 && t == 0.0) throw DomainError("zeta_euler_maclaurin: pole at s = 1");

  using cplx = std::complex<long double>;
  const cplx s(sigma, t);
  const auto& bf = bernoulli_over_factorial();
  const double eps = std::numeric_limits<double>::epsilon();

  long long n_len = std::max<long long>(10, static_cast<long long>(std::ceil(t / kPi))) + 10;
  for (int attempt = 0; attempt < 4; ++attempt, n_len *= 2) {
    const long double nl = static_cast<long double>(n_len);
    const long double log_n = std::log(nl);
    // N^{-s}
    const cplx n_pow = std::exp(-sigma * log_n) *
                       cplx(std::cos(reduce_angle(t * log_n)), -std::sin(reduce_angle(t * log_n)));

    // Bernoulli tail: T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cplx q = s / nl;  // s * N^{-1}, times N^{-s} later
    cplx tail = 0;
    double bound = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int k = 1; k <= kMaxCorrections; ++k) {
      const cplx term = static_cast<long double>(bf[k]) * q * n_pow;
      const cplx next_q = q * (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k)) / (nl * nl);
      const cplx next_term = static_cast<long double>(bf[k + 1]) * next_q * n_pow;
      tail += term;
      used = k;
      const long double factor = std::abs(s + static_cast<long double>(2 * k + 1)) / (sigma + 2 * k + 1);
      bound = static_cast<double>(factor * std::abs(next_term));
      if (bound < target_err / 4) break;
      q = next_q;
    }
    if (!(bound < target_err / 4)) continue;

    CompensatedSum<long double> re;
    CompensatedSum<long double> im;
    long double abs_sum = 0;
    for (long long n = 1; n < n_len; ++n) {
      const long double ln = std::log(static_cast<long double>(n));
      const long double mag = std::exp(-sigma * ln);
      const double ph = static_cast<double>(reduce_angle(t * ln));
      re.add(mag * std::cos(ph));
      im.add(-mag * std::sin(ph));
      abs_sum += mag;
    }
    const cplx head(re.value(), im.value());
    const cplx value = head + n_pow * nl / (s - 1.0L) + n_pow / 2.0L + tail;
    const double rounding = 3 * eps * static_cast<double>(abs_sum + 1);
    if (rounding > target_err) {
      throw PrecisionError("zeta_euler_maclaurin: rounding estimate " + std::to_string(rounding) +
                           " exceeds target " + std::to_string(target_err));
    }
    EulerMaclaurinResult out;
    out.value = std::complex<double>(static_cast<double>(value.real()), static_cast<double>(value.imag()));
    out.err_bound = bound + rounding;
    out.terms = static_cast<int>(n_len - 1);
    out.corrections = used;
    return out;
  }
  throw PrecisionError("zeta_euler_maclaurin: Bernoulli tail did not reach target");
}

ZEval hardy_z_euler_maclaurin(double t, double target_err) {
  if (!(t > 0)) throw DomainError("hardy_z: t must be positive");
  const auto em = zeta_euler_maclaurin(0.5, t, target_err);
  const long double th = reduce_angle(theta_any(t));
  const double c = static_cast<double>(std::cos(th));
  const double s = static_cast<double>(std::sin(th));
  ZEval out;
  out.t = t;
  // e^{i theta} zeta: real part
  out.z = c * em.value.real() - s * em.value.imag();
  out.method = ZMethod::euler_maclaurin;
  out.truncation_bound = em.err_bound;
  out.err_bound = em.err_bound + 1e-14 * std::abs(em.value);
  return out;
}

ZEval hardy_z(double t) {
  if (!(t > 0)) throw DomainError("hardy_z: t must be positive");
  if (t < kSwitchover) return hardy_z_euler_maclaurin(t);
  return hardy_z_riemann_siegel(t);
}

ZetaHalfLine zeta_half_line(double t) {
  const ZEval z = hardy_z(t);
  const long double th = reduce_angle(theta_any(t));
  ZetaHalfLine out;
  out.t = t;
  out.a = z.z * static_cast<double>(std::cos(th));
  out.b = -z.z * static_cast<double>(std::sin(th));
  return out;
}

}  // namespace gramlab
