#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gramlab {

/// A zero of Z(t) on the critical line. Z changes sign across
/// [t - bracket_width, t + bracket_width].
struct CriticalZero {
  std::int64_t index = 0;       ///< n of gamma_n, 1-based
  double t = 0;
  double bracket_width = 0;     ///< half-width of the sign-change bracket
  bool certified = false;
  bool ambiguous = false;       ///< within 1e-9 of a Gram point
  std::int64_t gram_index = 0;  ///< m with t_{m-1} < t <= t_m
};

/// N(t+0) and S(t+0) at one height.
struct CountResult {
  double t = 0;
  std::int64_t n_of_t = 0;
  double s_of_t = 0;  ///< integer at Gram points
  bool certified = false;
  bool ambiguous = false;  ///< t within 1e-9 of a located zero
};

struct Certificate {
  bool complete = false;
  std::int64_t located = 0;   ///< sign changes seen at the given depth
  std::int64_t expected = 0;  ///< N(t_hi+0) - N(t_lo+0) from the certified table
  int depth = 0;
  std::string diagnostic;
};

struct BuildOptions {
  unsigned threads = 1;
  int max_depth = 6;  ///< each Gram interval split into at most 2^max_depth pieces
  bool allow_uncertified = false;
};

inline constexpr double kAttributionTol = 1e-9;
inline constexpr double kBracketTol = 1e-9;

/// Zeros of Z on (0, t_top] located Gram block by Gram block, with the
/// count certified by Turing's method in Brent's form: K consecutive blocks
/// satisfying Rosser's rule above a good Gram point t_g >= 168 pi give
/// N(t_g) <= g, so matching the located count certifies everything below.
///
/// Gram indices follow theta(t_n) = (n - 1) pi, so G_n = (t_{n-1}, t_n]
/// and the zero-free stretch (0, t_0] is taken as known (gamma_1 > 14).
class ZeroTable {
 public:
  /// Certified table for Gram intervals G_1..G_{n_max}; extends past
  /// t = 168 pi and far enough above t_{n_max} for the Turing blocks.
  /// Throws UncertifiedRange unless opts.allow_uncertified.
  static ZeroTable build(std::int64_t n_max, const BuildOptions& opts = {});
  static ZeroTable build_to_height(double t_hi, const BuildOptions& opts = {});

  /// Reassembles a table from stored parts; interval counts are rederived.
  static ZeroTable from_parts(std::vector<double> gram_t, std::vector<CriticalZero> zeros,
                              std::int64_t certified_gram);

  std::int64_t n_max() const { return n_max_; }
  /// Largest Gram index g with every zero <= t_g located.
  std::int64_t certified_gram() const { return certified_gram_; }
  double certified_height() const;
  bool certified_through(std::int64_t n) const { return n <= certified_gram_; }

  const std::vector<double>& gram_heights() const { return gram_t_; }
  const std::vector<double>& gram_z() const { return gram_z_; }
  const std::vector<CriticalZero>& zeros() const { return zeros_; }
  /// Rosser-rule violations that survived densification, as Gram index ranges.
  const std::vector<std::pair<std::int64_t, std::int64_t>>& failed_blocks() const { return failed_; }

  double gram(std::int64_t n) const;
  /// Z(t_n) as computed during the build.
  double z_at_gram(std::int64_t n) const;
  /// (-1)^{n-1} Z(t_n) > 0
  bool good_gram(std::int64_t n) const;

  /// Zeros in (t_lo, t_hi].
  std::vector<CriticalZero> zeros_in(double t_lo, double t_hi) const;
  /// Number of located zeros in G_n.
  int interval_count(std::int64_t n) const;
  /// N(t_n + 0); throws UncertifiedRange beyond the certified range.
  std::int64_t n_at_gram(std::int64_t n) const;
  /// Delta(n) = S(t_n + 0) = N(t_n + 0) - n.
  std::int64_t s_at_gram(std::int64_t n) const;
  CountResult count_zeros(double t) const;
  /// Zero with index k (1-based); throws UncertifiedRange if not certified.
  const CriticalZero& zero(std::int64_t k) const;

  /// Sign changes of Z in (t_lo, t_hi] on the Gram grid split 2^depth ways,
  /// compared with the certified count.
  Certificate certificate(double t_lo, double t_hi, int depth) const;

 private:
  std::int64_t n_max_ = 0;
  std::int64_t certified_gram_ = -1;
  std::vector<double> gram_t_;
  std::vector<double> gram_z_;
  std::vector<CriticalZero> zeros_;
  std::vector<int> counts_;            // counts_[n] = zeros in G_n
  std::vector<std::int64_t> prefix_;   // prefix_[n] = N(t_n + 0)
  std::vector<std::pair<std::int64_t, std::int64_t>> failed_;

  void index_counts();
};

/// Number of Rosser blocks above a good Gram point at height t needed by
/// Brent's criterion: ceil(0.0061 ln^2 t + 0.08 ln t).
int turing_blocks_needed(double t);

/// Zeros in (t_lo, t_hi], 0 <= t_lo < t_hi, from a certified table built to t_hi.
std::vector<CriticalZero> find_zeros(double t_lo, double t_hi, const BuildOptions& opts = {});
CountResult count_zeros(double t, const BuildOptions& opts = {});
std::int64_t s_at_gram(std::int64_t n, const BuildOptions& opts = {});
/// Throws PreconditionError when t_lo >= t_hi.
Certificate completeness_certificate(double t_lo, double t_hi, int depth = 6,
                                     const BuildOptions& opts = {});

/// Brent's method on a sign-changing bracket; returns the final bracket
/// [lo, hi] with hi - lo <= tol.
template <class F>
std::pair<double, double> brent_bracket(F&& f, double a, double b, double fa, double fb, double tol);

}  // namespace gramlab

#include "gramlab/detail/brent.hpp"
