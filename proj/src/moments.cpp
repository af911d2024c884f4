#include "gramlab/moments.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"
#include "gramlab/theta.hpp"
#include "moment_common.hpp"

namespace gramlab {

using namespace detail;

MomentConfig make_moment_config(std::int64_t N, std::int64_t M, std::int64_t m, int k, double epsilon,
                                bool exploratory) {
  if (!(epsilon > 0 && epsilon < 1e-3)) throw PreconditionError("epsilon must lie in (0, 1e-3)");
  if (N < 0 || M < 1 || m < 0 || k < 0) throw PreconditionError("moment config: need N >= 0, M >= 1, m >= 0, k >= 0");
  MomentConfig c;
  c.N = N;
  c.M = M;
  c.m = m;
  c.k = k;
  c.epsilon = epsilon;
  c.exploratory = exploratory;
  c.L = std::log(std::log(static_cast<double>(N >= 3 ? N : N + M)));
  const double t_n = gram_point(N).t;
  c.x = std::exp(0.1 * epsilon * std::log(t_n));
  c.y = std::pow(c.x, 1.0 / (4.0 * std::max(k, 1)));
  c.A = std::exp(21.0) * std::pow(epsilon, -1.5);
  c.B = c.A * c.A * std::exp(-8.0);
  c.lambda = std::pow(2 * c.B * std::exp(1.0) * kPi * kPi, 2);
  return c;
}

namespace {

MomentReport start(const char* name, const MomentConfig& cfg) {
  MomentReport rep;
  rep.name = name;
  rep.config = cfg;
  if (cfg.N < 3) rep.notes.push_back("L taken as lnln(N + M) since N < 3");
  return rep;
}

void require_k_sqrt_l(MomentReport& rep, int k) {
  require_regime(rep, k >= 1 && k <= std::sqrt(rep.config.L),
                 "k = " + std::to_string(k) + " not in [1, sqrt(L)] with L = " + std::to_string(rep.config.L));
}

}  // namespace

MomentReport block_difference_moment(const ZeroTable& tab, const MomentConfig& cfg) {
  MomentReport rep = start("block_difference_moment", cfg);
  const int k = cfg.k;
  if (k < 1) throw PreconditionError("block_difference_moment: k must be >= 1");
  require_certified(tab, cfg.N + cfg.M + cfg.m, rep.name);
  require_short_range(rep);
  // m >= k eps^-1 exp(lambda k^2), compared in logs
  const double log_m_floor = std::log(k / cfg.epsilon) + cfg.lambda * k * k;
  require_regime(rep, cfg.m > 0 && std::log(static_cast<double>(cfg.m)) >= log_m_floor,
                 "m = " + std::to_string(cfg.m) + " below k eps^-1 exp(lambda k^2) = exp(" +
                     std::to_string(log_m_floor) + ")");
  rep.notes.push_back("ceiling m <= c ln N not checked: c is an unspecified small constant");

  std::int64_t s = 0;
  for (std::int64_t n = cfg.N + 1; n <= cfg.N + cfg.M; ++n) {
    s = iadd(s, ipow(tab.s_at_gram(n + cfg.m) - tab.s_at_gram(n), 2 * k));
  }
  set_exact(rep, s);
  const double lg = std::log(cfg.m * cfg.epsilon / k);
  if (cfg.m > 0 && lg > 0) {
    set_main_term(rep, std::exp(log_factorial(2 * k) - log_factorial(k) + std::log(static_cast<double>(cfg.M)) +
                                k * std::log(lg / (2 * kPi * kPi))));
  } else {
    rep.notes.push_back("main term undefined: ln(m eps / k) <= 0");
  }
  return rep;
}

MomentReport adjacent_difference_moment(const ZeroTable& tab, const MomentConfig& cfg) {
  MomentReport rep = start("adjacent_difference_moment", cfg);
  rep.config.m = 1;
  const int k = cfg.k;
  if (k < 1) throw PreconditionError("adjacent_difference_moment: k must be >= 1");
  require_certified(tab, cfg.N + cfg.M, rep.name);
  require_short_range(rep);
  require_regime(rep, k <= std::log(cfg.x) / 192,
                 "k = " + std::to_string(k) + " above ln(x)/192 = " + std::to_string(std::log(cfg.x) / 192));
  std::int64_t s = 0;
  for (std::int64_t n = cfg.N + 1; n <= cfg.N + cfg.M; ++n) {
    s = iadd(s, ipow(tab.interval_count(n) - 1, 2 * k));
  }
  set_exact(rep, s);
  set_bound(rep,
            std::log(2.0 * static_cast<double>(cfg.M) * k) + 2 * k * std::log(4.0 * k * std::sqrt(cfg.B)),
            false);
  return rep;
}

MomentReport first_moment(const ZeroTable& tab, std::int64_t N, std::int64_t M) {
  MomentConfig cfg;
  cfg.N = N;
  cfg.M = M;
  MomentReport rep = start("first_moment", cfg);
  if (N < 0 || M < 1) throw PreconditionError("first_moment: need N >= 0, M >= 1");
  require_certified(tab, N + M, rep.name);
  std::int64_t s = 0;
  for (std::int64_t n = N + 1; n <= N + M; ++n) s += std::abs(tab.interval_count(n) - 1);
  set_exact(rep, s);
  set_main_term(rep, static_cast<double>(M));
  rep.notes.push_back("ratio is sum / M; the constant c1(eps) is not explicit");
  return rep;
}

EmptyCrowded empty_and_crowded_counts(const ZeroTable& tab, std::int64_t N, std::int64_t M) {
  if (N < 0 || M < 1) throw PreconditionError("empty_and_crowded_counts: need N >= 0, M >= 1");
  require_certified(tab, N + M, "empty_and_crowded_counts");
  EmptyCrowded out;
  for (std::int64_t n = N + 1; n <= N + M; ++n) {
    const int c = tab.interval_count(n);
    out.empty += c == 0;
    out.crowded += c >= 2;
  }
  out.empty_fraction = static_cast<double>(out.empty) / static_cast<double>(M);
  out.crowded_fraction = static_cast<double>(out.crowded) / static_cast<double>(M);
  return out;
}

MomentReport alternating_sum(const ZeroTable& tab, const MomentConfig& cfg) {
  MomentReport rep = start("alternating_sum", cfg);
  const int j = cfg.k;
  if (j < 0) throw PreconditionError("alternating_sum: negative order");
  require_certified(tab, cfg.N + cfg.M, rep.name);
  std::int64_t s = 0;
  for (std::int64_t n = cfg.N + 1; n <= cfg.N + cfg.M; ++n) {
    s = iadd(s, ipow(tab.s_at_gram(n), j) * (tab.interval_count(n) - 1));
  }
  set_exact(rep, s);
  if (j == 0) {
    rep.notes.push_back("T_0 telescopes to S(t_{N+M}+0) - S(t_N+0); no bound");
    return rep;
  }
  require_short_range(rep);
  const double log_m = std::log(static_cast<double>(cfg.M));
  const double log_l = std::log(cfg.L);
  if (j % 2 == 1) {
    const int k = (j + 1) / 2;
    require_k_sqrt_l(rep, k);
    set_bound(rep, std::log(0.02) + (k + 1) * std::log(cfg.A * k) + log_m + (k - 1) * log_l, true);
  } else {
    const int k = j / 2;
    require_k_sqrt_l(rep, k);
    set_bound(rep,
              std::log(0.02) + (k + 1) * std::log(10 * cfg.A) + log_factorial(2 * k) - log_factorial(k) + log_m +
                  (k - 0.5) * log_l - 2 * k * std::log(2 * kPi),
              true);
  }
  return rep;
}

std::int64_t alternating_sum_t1_identity(const ZeroTable& tab, std::int64_t N, std::int64_t M) {
  require_certified(tab, N + M, "alternating_sum_t1_identity");
  const std::int64_t a = tab.s_at_gram(N + M);
  const std::int64_t b = tab.s_at_gram(N);
  std::int64_t r2 = 0;
  for (std::int64_t n = N + 1; n <= N + M; ++n) {
    const std::int64_t r = tab.interval_count(n) - 1;
    r2 += r * r;
  }
  return a * a - b * b + r2;
}

MomentReport selberg_delta_moment(const ZeroTable& tab, std::int64_t N, std::int64_t M, int k, Parity parity,
                                  double epsilon, bool exploratory) {
  if (k < 1) throw PreconditionError("selberg_delta_moment: k must be >= 1");
  MomentReport rep = start(parity == Parity::even ? "selberg_delta_moment_even" : "selberg_delta_moment_odd",
                           make_moment_config(N, M, 0, k, epsilon, exploratory));
  const auto& cfg = rep.config;
  require_short_range(rep);
  require_k_sqrt_l(rep, k);
  const int e = parity == Parity::even ? 2 * k : 2 * k - 1;
  std::int64_t s = 0;
  for (std::int64_t n = N + 1; n <= N + M; ++n) {
    const CriticalZero& z = tab.zero(n);
    s = iadd(s, ipow(z.gram_index - n, e));
  }
  set_exact(rep, s);
  const double log_m = std::log(static_cast<double>(M));
  if (parity == Parity::even) {
    set_main_term(rep, std::exp(log_factorial(2 * k) - log_factorial(k) + log_m + k * std::log(cfg.L) -
                                2 * k * std::log(2 * kPi)));
  } else {
    set_bound(rep, 9.0 + k * std::log(cfg.B * k) + log_m + (k - 1) * std::log(cfg.L), false);
  }
  return rep;
}

MomentReport titchmarsh_correlation(const ZeroTable& tab, std::int64_t N) {
  if (N < 1) throw PreconditionError("titchmarsh_correlation: N must be >= 1");
  MomentConfig cfg;
  cfg.N = N;
  cfg.M = N;
  MomentReport rep;
  rep.name = "titchmarsh_correlation";
  rep.config = cfg;
  CompensatedSum<double> acc;
  double prev = tab.z_at_gram(0);
  for (std::int64_t n = 1; n <= N; ++n) {
    const double z = tab.z_at_gram(n);
    acc.add(prev * z);
    prev = z;
  }
  rep.sum = acc.value();
  set_main_term(rep, -2.0 * (kEulerGamma + 1.0) * static_cast<double>(N));
  return rep;
}

}  // namespace gramlab
