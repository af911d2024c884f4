#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gramlab/zeros.hpp"

namespace gramlab {

/// Gram interval G_n = (t_{n-1}, t_n] and its Gram's-law flags.
struct IntervalRecord {
  std::int64_t n = 0;
  int zero_count = 0;
  int r = 0;          ///< zero_count - 1 = Delta(n) - Delta(n - 1)
  bool sgl = false;   ///< holds the zero with index n
  bool gl = false;    ///< exactly one zero
  bool wgl = false;   ///< odd number of zeros
  bool ambiguous = false;
};

/// Delta_n = m - n where t_{m-1} < gamma_n <= t_m. With on_line set this is also D_n.
struct DeltaRecord {
  std::int64_t zero_index = 0;
  std::int64_t gram_index = 0;
  std::int64_t delta = 0;
  bool on_line = false;
};

struct NuHistogram {
  std::int64_t upper_index = 0;
  std::map<int, std::int64_t> counts;  ///< k -> nu_k(N); only k with nu_k > 0
  std::int64_t s_at_end = 0;           ///< S(t_N + 0)

  std::int64_t nu(int k) const;
};

/// Records for G_{n_lo}..G_{n_hi}. Throws UncertifiedRange outside the
/// certified range and PreconditionError for n_lo < 1 or n_lo > n_hi.
std::vector<IntervalRecord> classify_intervals(const ZeroTable& tab, std::int64_t n_lo, std::int64_t n_hi);

DeltaRecord delta_n(const ZeroTable& tab, std::int64_t zero_index);

/// GSP flags (Delta_n == 0) for zero indices n_lo..n_hi.
std::vector<bool> gsp_flags(const ZeroTable& tab, std::int64_t n_lo, std::int64_t n_hi);

NuHistogram nu_histogram(const ZeroTable& tab, std::int64_t N);

/// sum nu_k = N, sum k nu_k = N + S(t_N+0) and
/// nu_0 = nu_2 + 2 nu_3 + 3 nu_4 + ... - S(t_N+0), all exact.
bool nu_identities_hold(const NuHistogram& h);

/// Inside G_n with zeros s..s+r: Delta_{s+j} = r - j - Delta(n) for j = 0..r.
/// Vacuously true for an empty interval.
bool delta_shift_check(const ZeroTable& tab, std::int64_t n);

}  // namespace gramlab
