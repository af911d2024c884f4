#include "gramlab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"
#include "gramlab/theta.hpp"
#include "gramlab/zeta.hpp"

namespace gramlab {

namespace {

// Brent's criterion needs the good Gram point at or above 168 pi.
constexpr double kTuringFloor = 168 * kPi;

double z_value(double t) { return hardy_z(t).z; }

bool positive(double z) { return z >= 0; }  // an exact zero counts as positive

struct Sample {
  double t;
  double z;
};

struct BlockResult {
  std::vector<CriticalZero> zeros;  // index left unset
  bool rosser_ok = false;
  int depth = 0;
};

// Samples one Gram-point gap split 2^depth ways, endpoints included.
std::vector<Sample> densify(const std::vector<Sample>& coarse) {
  std::vector<Sample> fine;
  fine.reserve(2 * coarse.size());
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    fine.push_back(coarse[i]);
    const double mid = 0.5 * (coarse[i].t + coarse[i + 1].t);
    fine.push_back({mid, z_value(mid)});
  }
  fine.push_back(coarse.back());
  return fine;
}

CriticalZero refine(const Sample& lo, const Sample& hi) {
  const auto [a, b] = brent_bracket(z_value, lo.t, hi.t, lo.z, hi.z, kBracketTol);
  CriticalZero z;
  z.t = 0.5 * (a + b);
  z.bracket_width = 0.5 * (b - a);
  return z;
}

// Block between good Gram points a < b: intervals G_{a+1}..G_b.
BlockResult process_block(const std::vector<double>& gram_t, const std::vector<double>& gram_z, std::int64_t a,
                          std::int64_t b, int max_depth) {
  const std::int64_t len = b - a;
  // one sample list per Gram interval
  std::vector<std::vector<Sample>> gaps(static_cast<std::size_t>(len));
  for (std::int64_t n = a + 1; n <= b; ++n) {
    gaps[n - a - 1] = {{gram_t[n - 1], gram_z[n - 1]}, {gram_t[n], gram_z[n]}};
  }
  auto changes = [](const std::vector<Sample>& s) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) c += positive(s[i].z) != positive(s[i + 1].z);
    return c;
  };

  BlockResult out;
  int depth = 0;
  for (;; ++depth) {
    std::int64_t total = 0;
    for (const auto& g : gaps) total += changes(g);
    if (total >= len || depth == max_depth) {
      out.rosser_ok = total >= len;
      break;
    }
    for (auto& g : gaps) g = densify(g);
  }
  out.depth = depth;
  for (std::int64_t n = a + 1; n <= b; ++n) {
    const auto& s = gaps[n - a - 1];
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (positive(s[i].z) == positive(s[i + 1].z)) continue;
      CriticalZero z = refine(s[i], s[i + 1]);
      z.gram_index = n;
      z.ambiguous = std::abs(z.t - gram_t[n]) < kAttributionTol || std::abs(z.t - gram_t[n - 1]) < kAttributionTol;
      out.zeros.push_back(z);
    }
  }
  return out;
}

}  // namespace

int turing_blocks_needed(double t) {
  const double l = std::log(t);
  return std::max(1, static_cast<int>(std::ceil(0.0061 * l * l + 0.08 * l)));
}

double ZeroTable::gram(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(gram_t_.size())) {
    throw UncertifiedRange("Gram index " + std::to_string(n) + " outside the table");
  }
  return gram_t_[n];
}

double ZeroTable::z_at_gram(std::int64_t n) const {
  gram(n);
  return gram_z_[n];
}

bool ZeroTable::good_gram(std::int64_t n) const {
  const double z = z_at_gram(n);
  return (n % 2 != 0) ? z > 0 : z < 0;
}

double ZeroTable::certified_height() const {
  return certified_gram_ >= 0 ? gram_t_[certified_gram_] : 0.0;
}

void ZeroTable::index_counts() {
  const std::int64_t last = zeros_.empty() ? 0 : zeros_.back().gram_index;
  const std::int64_t top = std::max<std::int64_t>(last, static_cast<std::int64_t>(gram_t_.size()) - 1);
  counts_.assign(static_cast<std::size_t>(top + 1), 0);
  for (auto& z : zeros_) counts_[z.gram_index]++;
  prefix_.assign(counts_.size(), 0);
  std::int64_t run = 0;
  for (std::size_t n = 0; n < counts_.size(); ++n) {
    run += counts_[n];
    prefix_[n] = run;
  }
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    zeros_[i].index = static_cast<std::int64_t>(i) + 1;
    zeros_[i].certified = zeros_[i].gram_index <= certified_gram_;
  }
}

ZeroTable ZeroTable::build(std::int64_t n_max, const BuildOptions& opts) {
  if (n_max < 0) throw PreconditionError("ZeroTable::build: negative Gram index");
  if (opts.max_depth < 0 || opts.max_depth > 20) throw PreconditionError("ZeroTable::build: max_depth outside [0, 20]");

  ZeroTable tab;
  tab.n_max_ = n_max;
  const std::int64_t floor_index = gram_index_below(kTuringFloor) + 1;
  const std::int64_t target = std::max(n_max, floor_index);
  // give up on certification this far past the target
  const std::int64_t slack = 4096 + target / 8;

  std::int64_t last_good = 0;  // blocks processed up to this good Gram point
  std::vector<std::int64_t> good_points{0};
  std::vector<bool> block_ok;  // per block ending at good_points[i + 1]

  std::int64_t n_top = target + 32;
  for (;;) {
    // Gram points and Z on the new stretch
    const auto old = static_cast<std::int64_t>(tab.gram_t_.size());
    tab.gram_t_.resize(n_top + 1);
    tab.gram_z_.resize(n_top + 1);
    parallel_chunks(static_cast<std::size_t>(n_top + 1 - old), opts.threads,
                    [&](std::size_t lo, std::size_t hi, unsigned) {
                      for (std::size_t i = lo; i < hi; ++i) {
                        const std::int64_t n = old + static_cast<std::int64_t>(i);
                        tab.gram_t_[n] = gram_point(n).t;
                        tab.gram_z_[n] = z_value(tab.gram_t_[n]);
                      }
                    });
    if (old == 0 && !tab.good_gram(0)) throw ConvergenceError("Z(t_0) has the wrong sign");

    std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
    for (std::int64_t n = last_good + 1; n <= n_top; ++n) {
      if (tab.good_gram(n)) {
        blocks.emplace_back(last_good, n);
        good_points.push_back(n);
        last_good = n;
      }
    }
    std::vector<BlockResult> results(blocks.size());
    parallel_chunks(blocks.size(), opts.threads, [&](std::size_t lo, std::size_t hi, unsigned) {
      for (std::size_t i = lo; i < hi; ++i) {
        results[i] = process_block(tab.gram_t_, tab.gram_z_, blocks[i].first, blocks[i].second, opts.max_depth);
      }
    });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      block_ok.push_back(results[i].rosser_ok);
      if (!results[i].rosser_ok) tab.failed_.push_back(blocks[i]);
      for (auto& z : results[i].zeros) tab.zeros_.push_back(z);
    }

    // Certification: largest good g >= 168 pi whose located count is g and
    // which is followed by enough Rosser blocks.
    std::vector<std::int64_t> located(good_points.size(), 0);
    {
      std::size_t zi = 0;
      for (std::size_t i = 0; i < good_points.size(); ++i) {
        while (zi < tab.zeros_.size() && tab.zeros_[zi].gram_index <= good_points[i]) ++zi;
        located[i] = static_cast<std::int64_t>(zi);
      }
    }
    tab.certified_gram_ = -1;
    for (std::size_t i = good_points.size(); i-- > 0;) {
      const std::int64_t g = good_points[i];
      if (tab.gram_t_[g] < kTuringFloor || located[i] != g) continue;
      std::size_t j = i;
      int run = 0;
      bool enough = false;
      while (j + 1 < good_points.size() && block_ok[j]) {
        ++j;
        ++run;
        if (run >= turing_blocks_needed(tab.gram_t_[good_points[j]])) {
          enough = true;
          break;
        }
      }
      if (enough) {
        tab.certified_gram_ = g;
        break;
      }
    }
    if (tab.certified_gram_ >= target || n_top >= target + slack) break;
    n_top += 64;
  }

  // Below 168 pi the count is certified through the first qualifying g above it.
  tab.index_counts();
  if (tab.certified_gram_ < n_max && !opts.allow_uncertified) {
    std::string why = "zero count not certified through Gram index " + std::to_string(n_max);
    if (!tab.failed_.empty()) {
      why += "; Rosser blocks unresolved at depth " + std::to_string(opts.max_depth) + " starting at G_" +
             std::to_string(tab.failed_.front().first + 1);
    }
    throw UncertifiedRange(why);
  }
  return tab;
}

ZeroTable ZeroTable::build_to_height(double t_hi, const BuildOptions& opts) {
  if (!(t_hi > 0)) throw PreconditionError("ZeroTable::build_to_height: height must be positive");
  const std::int64_t n = t_hi <= gram_point(0).t ? 0 : gram_index_below(t_hi) + 1;
  return build(n, opts);
}

ZeroTable ZeroTable::from_parts(std::vector<double> gram_t, std::vector<CriticalZero> zeros,
                                std::int64_t certified_gram) {
  ZeroTable tab;
  tab.gram_t_ = std::move(gram_t);
  tab.gram_z_.resize(tab.gram_t_.size());
  for (std::size_t n = 0; n < tab.gram_t_.size(); ++n) tab.gram_z_[n] = z_value(tab.gram_t_[n]);
  for (auto& z : zeros) {
    const auto it = std::lower_bound(tab.gram_t_.begin(), tab.gram_t_.end(), z.t);
    z.gram_index = it - tab.gram_t_.begin();
    z.ambiguous = (it != tab.gram_t_.end() && std::abs(*it - z.t) < kAttributionTol) ||
                  (it != tab.gram_t_.begin() && std::abs(*(it - 1) - z.t) < kAttributionTol);
  }
  tab.zeros_ = std::move(zeros);
  tab.certified_gram_ = std::min<std::int64_t>(certified_gram, static_cast<std::int64_t>(tab.gram_t_.size()) - 1);
  tab.n_max_ = tab.certified_gram_;
  tab.index_counts();
  return tab;
}

std::vector<CriticalZero> ZeroTable::zeros_in(double t_lo, double t_hi) const {
  const auto lo = std::upper_bound(zeros_.begin(), zeros_.end(), t_lo,
                                   [](double t, const CriticalZero& z) { return t < z.t; });
  const auto hi = std::upper_bound(zeros_.begin(), zeros_.end(), t_hi,
                                   [](double t, const CriticalZero& z) { return t < z.t; });
  return {lo, hi};
}

int ZeroTable::interval_count(std::int64_t n) const {
  if (n < 1 || n > certified_gram_) {
    throw UncertifiedRange("G_" + std::to_string(n) + " outside the certified range (last certified G_" +
                           std::to_string(certified_gram_) + ")");
  }
  return counts_[n];
}

std::int64_t ZeroTable::n_at_gram(std::int64_t n) const {
  if (n < 0 || n > certified_gram_) {
    throw UncertifiedRange("t_" + std::to_string(n) + " outside the certified range (last certified t_" +
                           std::to_string(certified_gram_) + ")");
  }
  return prefix_[n];
}

std::int64_t ZeroTable::s_at_gram(std::int64_t n) const { return n_at_gram(n) - n; }

const CriticalZero& ZeroTable::zero(std::int64_t k) const {
  if (k < 1 || k > static_cast<std::int64_t>(zeros_.size()) || !zeros_[k - 1].certified) {
    throw UncertifiedRange("zero index " + std::to_string(k) + " outside the certified range");
  }
  return zeros_[k - 1];
}

CountResult ZeroTable::count_zeros(double t) const {
  if (!(t > 0)) throw PreconditionError("count_zeros: height must be positive");
  CountResult out;
  out.t = t;
  out.certified = t <= certified_height();
  if (!out.certified) {
    throw UncertifiedRange("count_zeros: t = " + std::to_string(t) + " above the certified height " +
                           std::to_string(certified_height()));
  }
  const auto it = std::upper_bound(zeros_.begin(), zeros_.end(), t,
                                   [](double x, const CriticalZero& z) { return x < z.t; });
  out.n_of_t = it - zeros_.begin();
  out.ambiguous = (it != zeros_.end() && it->t - t < kAttributionTol) ||
                  (it != zeros_.begin() && t - (it - 1)->t < kAttributionTol);
  // exact at Gram points, theta-based elsewhere
  const auto g = std::lower_bound(gram_t_.begin(), gram_t_.end(), t);
  if (g != gram_t_.end() && *g == t) {
    out.s_of_t = static_cast<double>(out.n_of_t - (g - gram_t_.begin()));
  } else {
    const double th = t >= kThetaFloor ? theta(t).value : theta_loggamma(t);
    out.s_of_t = static_cast<double>(out.n_of_t) - th / kPi - 1;
  }
  return out;
}

Certificate ZeroTable::certificate(double t_lo, double t_hi, int depth) const {
  if (!(t_lo < t_hi)) throw PreconditionError("completeness_certificate: empty or inverted range");
  if (depth < 0 || depth > 20) throw PreconditionError("completeness_certificate: depth outside [0, 20]");
  Certificate out;
  out.depth = depth;
  if (t_hi > certified_height()) {
    out.diagnostic = "t_hi above the certified height " + std::to_string(certified_height());
    return out;
  }
  // (0, t_0] holds no zero
  const double lo = std::max(t_lo, gram_t_[0]);
  std::vector<double> grid{lo};
  for (auto it = std::upper_bound(gram_t_.begin(), gram_t_.end(), lo); it != gram_t_.end() && *it < t_hi; ++it) {
    grid.push_back(*it);
  }
  if (t_hi > lo) grid.push_back(t_hi);
  const int split = 1 << depth;
  bool prev_pos = positive(z_value(grid[0]));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    for (int j = 1; j <= split; ++j) {
      const double t = j == split ? grid[i + 1] : grid[i] + (grid[i + 1] - grid[i]) * j / split;
      const bool pos = positive(z_value(t));
      out.located += pos != prev_pos;
      prev_pos = pos;
    }
  }
  out.expected = count_zeros(t_hi).n_of_t - count_zeros(std::max(t_lo, 1.0)).n_of_t;
  out.complete = out.located == out.expected;
  out.diagnostic = std::to_string(out.located) + " sign changes at depth " + std::to_string(depth) + ", " +
                   std::to_string(out.expected) + " zeros counted";
  return out;
}

std::vector<CriticalZero> find_zeros(double t_lo, double t_hi, const BuildOptions& opts) {
  if (!(t_lo >= 0 && t_lo < t_hi)) throw PreconditionError("find_zeros: need 0 <= t_lo < t_hi");
  return ZeroTable::build_to_height(t_hi, opts).zeros_in(t_lo, t_hi);
}

CountResult count_zeros(double t, const BuildOptions& opts) {
  return ZeroTable::build_to_height(t, opts).count_zeros(t);
}

std::int64_t s_at_gram(std::int64_t n, const BuildOptions& opts) {
  return ZeroTable::build(n, opts).s_at_gram(n);
}

Certificate completeness_certificate(double t_lo, double t_hi, int depth, const BuildOptions& opts) {
  if (!(t_lo < t_hi)) throw PreconditionError("completeness_certificate: empty or inverted range");
  return ZeroTable::build_to_height(t_hi, opts).certificate(t_lo, t_hi, depth);
}

}  // namespace gramlab
