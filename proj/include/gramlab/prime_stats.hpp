#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "gramlab/moments.hpp"
#include "gramlab/zeros.hpp"

namespace gramlab {

inline constexpr std::uint64_t kSieveCeiling = 100'000'000;
/// Sieves above this size go through the on-disk cache when a cache directory is set.
inline constexpr std::uint64_t kSieveCacheFloor = 10'000'000;

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  ///< ascending, all primes <= limit
};

/// Segmented sieve of Eratosthenes. Throws ResourceError above `ceiling`.
PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t ceiling = kSieveCeiling);

/// Cache file: "GRAMLAB\0", version byte, u64 limit, u64 count, primes;
/// integers little-endian.
void write_prime_cache(const std::filesystem::path& path, const PrimeTable& table);
/// Throws VersionMismatch on an unknown version byte and ParseError on a bad header or short file.
PrimeTable read_prime_cache(const std::filesystem::path& path);

/// Directory used by shared_primes for sieves above kSieveCacheFloor; empty disables caching.
void set_prime_cache_dir(const std::filesystem::path& dir);

/// Process-wide table covering at least `limit`; thread-safe.
const PrimeTable& shared_primes(std::uint64_t limit);

struct MertensSums {
  double sum_logp_over_p = 0;
  double sum_recip_p = 0;
};
MertensSums mertens_sums(std::uint64_t x);

/// Meissel-Mertens constant.
inline constexpr double kMertensConstant = 0.26149721284764278376;

/// (1/pi) sum_{p<y} sin(t ln p) / sqrt(p)
double v_y(double t, double y);

struct VxhResult {
  double value = 0;      ///< sum_{p<=x} sin^2(h ln p / 2) / p
  double main_term = 0;  ///< ln(h ln x) / 2
  double deviation = 0;  ///< |value - main_term|
};

inline constexpr double kPrimeSquareH0 = 0.4;

/// Requires 0 < h < 0.4 and h ln x > 2 (PreconditionError otherwise).
VxhResult v_xh(double x, double h);

/// sum_{N<n<=N+M} R(t_n+0)^{2k}, R = S + V_y, against (A e^-4 k)^{2k} M.
/// Strict mode requires 1 <= k <= ln(x)/192.
MomentReport residual_moments(const ZeroTable& tab, const MomentConfig& cfg);

using PrimeCoefficients = std::function<std::complex<double>(std::uint64_t)>;

struct DiagonalCheck {
  double left = 0;    ///< brute-force sum over p_1..p_k = q_1..q_k
  double sigma1 = 0;
  double sigma2 = 0;
  double theta = 0;   ///< (left / k! - sigma1^k) / (k^2 sigma1^{k-2} sigma2); 0 when sigma2 = 0
  bool holds = false;
};

/// k = 1: left equals sigma1 (any y >= 2). k = 2: theta in [-1, 0], requires y > e^3;
/// ResourceError for k = 2 with y > 1e3.
DiagonalCheck diagonal_identity_check(int k, double y, const PrimeCoefficients& a);

}  // namespace gramlab
