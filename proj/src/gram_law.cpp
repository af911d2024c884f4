#include "gramlab/gram_law.hpp"

#include <string>

#include "gramlab/errors.hpp"

namespace gramlab {

namespace {

void check_range(const ZeroTable& tab, std::int64_t lo, std::int64_t hi, const char* what) {
  if (lo < 1 || lo > hi) throw PreconditionError(std::string(what) + ": need 1 <= lo <= hi");
  if (!tab.certified_through(hi)) {
    throw UncertifiedRange(std::string(what) + ": index " + std::to_string(hi) +
                           " beyond the certified range (last " + std::to_string(tab.certified_gram()) + ")");
  }
}

}  // namespace

std::int64_t NuHistogram::nu(int k) const {
  const auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

std::vector<IntervalRecord> classify_intervals(const ZeroTable& tab, std::int64_t n_lo, std::int64_t n_hi) {
  check_range(tab, n_lo, n_hi, "classify_intervals");
  std::vector<IntervalRecord> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  const auto& zs = tab.zeros();
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    IntervalRecord rec;
    rec.n = n;
    rec.zero_count = tab.interval_count(n);
    rec.r = rec.zero_count - 1;
    rec.gl = rec.zero_count == 1;
    rec.wgl = rec.zero_count % 2 == 1;
    // zeros of G_n carry indices N(t_{n-1}+0)+1 .. N(t_n+0)
    const std::int64_t first = tab.n_at_gram(n - 1) + 1;
    const std::int64_t last = tab.n_at_gram(n);
    rec.sgl = first <= n && n <= last;
    for (std::int64_t k = first; k <= last; ++k) rec.ambiguous = rec.ambiguous || zs[k - 1].ambiguous;
    out.push_back(rec);
  }
  return out;
}

DeltaRecord delta_n(const ZeroTable& tab, std::int64_t zero_index) {
  if (zero_index < 1) throw PreconditionError("delta_n: zero index must be >= 1");
  const CriticalZero& z = tab.zero(zero_index);
  DeltaRecord out;
  out.zero_index = zero_index;
  out.gram_index = z.gram_index;
  out.delta = z.gram_index - zero_index;
  out.on_line = z.certified;
  return out;
}

std::vector<bool> gsp_flags(const ZeroTable& tab, std::int64_t n_lo, std::int64_t n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw PreconditionError("gsp_flags: need 1 <= n_lo <= n_hi");
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) out.push_back(delta_n(tab, n).delta == 0);
  return out;
}

NuHistogram nu_histogram(const ZeroTable& tab, std::int64_t N) {
  if (N < 1) throw PreconditionError("nu_histogram: N must be >= 1");
  check_range(tab, 1, N, "nu_histogram");
  NuHistogram h;
  h.upper_index = N;
  for (std::int64_t n = 1; n <= N; ++n) h.counts[tab.interval_count(n)]++;
  h.s_at_end = tab.s_at_gram(N);
  return h;
}

bool nu_identities_hold(const NuHistogram& h) {
  std::int64_t total = 0, weighted = 0, excess = 0;
  for (const auto& [k, v] : h.counts) {
    total += v;
    weighted += k * v;
    if (k >= 2) excess += (k - 1) * v;
  }
  return total == h.upper_index && weighted == h.upper_index + h.s_at_end &&
         h.nu(0) == excess - h.s_at_end;
}

bool delta_shift_check(const ZeroTable& tab, std::int64_t n) {
  check_range(tab, n, n, "delta_shift_check");
  const std::int64_t r = tab.interval_count(n) - 1;
  if (r < 0) return true;
  const std::int64_t s = tab.n_at_gram(n - 1) + 1;
  const std::int64_t big_delta = tab.s_at_gram(n);
  for (std::int64_t j = 0; j <= r; ++j) {
    if (delta_n(tab, s + j).delta != r - j - big_delta) return false;
  }
  return true;
}

}  // namespace gramlab
