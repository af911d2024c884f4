#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gramlab/zeros.hpp"

namespace gramlab {

inline constexpr double kAlpha = 27.0 / 82.0;

/// Parameters of one short-range moment computation over N < n <= N + M.
/// Derived constants follow x = t_N^{0.1 eps}, y = x^{1/(4k)},
/// A = e^21 eps^-1.5, B = A^2 e^-8, lambda = (2 B e pi^2)^2.
struct MomentConfig {
  std::int64_t N = 0;
  std::int64_t M = 0;
  std::int64_t m = 1;
  int k = 1;
  double epsilon = 9e-4;
  bool exploratory = false;  ///< compute outside the proven parameter windows

  double L = 0;  ///< ln ln N (ln ln (N + M) when N < 3)
  double x = 0;
  double y = 0;
  double A = 0;
  double B = 0;
  double lambda = 0;
};

/// Fills the derived fields. Throws PreconditionError for eps outside
/// (0, 1e-3), N < 0, M < 1, m < 0 or k < 0.
MomentConfig make_moment_config(std::int64_t N, std::int64_t M, std::int64_t m, int k, double epsilon,
                                bool exploratory = false);

struct MomentReport {
  std::string name;
  MomentConfig config;
  double sum = 0;
  bool integer = false;
  std::int64_t exact_sum = 0;  ///< valid when integer
  bool has_main_term = false;
  double main_term = 0;
  double ratio = 0;  ///< sum / main_term
  bool has_bound = false;
  double log_bound = 0;  ///< natural log of the upper bound; bounds overflow binary64
  double bound = 0;      ///< exp(log_bound), possibly inf
  bool bound_satisfied = true;
  std::vector<std::string> notes;  ///< parameter-window violations in exploratory mode and similar
};

/// sum (S(t_{n+m}+0) - S(t_n+0))^{2k}; main term (2k)!/k! M (ln(m eps/k) / (2 pi^2))^k when ln(m eps/k) > 0.
MomentReport block_difference_moment(const ZeroTable& tab, const MomentConfig& cfg);

/// sum r(n)^{2k} with the bound 2 M k (4 k sqrt B)^{2k}. Ignores cfg.m.
MomentReport adjacent_difference_moment(const ZeroTable& tab, const MomentConfig& cfg);

/// sum |r(n)|, reported as a ratio to M.
MomentReport first_moment(const ZeroTable& tab, std::int64_t N, std::int64_t M);

struct EmptyCrowded {
  std::int64_t empty = 0;    ///< M1: r(n) = -1
  std::int64_t crowded = 0;  ///< M2: r(n) >= 1
  double empty_fraction = 0;
  double crowded_fraction = 0;
};
EmptyCrowded empty_and_crowded_counts(const ZeroTable& tab, std::int64_t N, std::int64_t M);

/// T_j = sum S^j(t_n+0) r(n) with j = cfg.k; odd j = 2k-1 bounded by
/// 0.02 (A k)^{k+1} M L^{k-1}, even j = 2k by
/// 0.02 (10 A)^{k+1} (2k)!/k! M L^{k-1/2} / (2 pi)^{2k}. T_0 telescopes.
MomentReport alternating_sum(const ZeroTable& tab, const MomentConfig& cfg);

/// 2 T_1 from Delta^2(N+M) - Delta^2(N) + sum r(n)^2, which holds exactly.
std::int64_t alternating_sum_t1_identity(const ZeroTable& tab, std::int64_t N, std::int64_t M);

enum class Parity { even, odd };

/// Zero-indexed sum over N < n <= N + M of Delta_n^{2k} (even) or
/// Delta_n^{2k-1} (odd). Even: main term (2k)!/k! M L^k / (2 pi)^{2k}.
/// Odd: bound e^9 (B k)^k M L^{k-1}.
MomentReport selberg_delta_moment(const ZeroTable& tab, std::int64_t N, std::int64_t M, int k, Parity parity,
                                  double epsilon = 9e-4, bool exploratory = false);

/// sum_{n<=N} Z(t_{n-1}) Z(t_n) against -2 (gamma + 1) N.
MomentReport titchmarsh_correlation(const ZeroTable& tab, std::int64_t N);

}  // namespace gramlab
