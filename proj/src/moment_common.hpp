#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/moments.hpp"

namespace gramlab::detail {

// A violated parameter window throws in strict mode and becomes a note otherwise.
inline void require_regime(MomentReport& rep, bool ok, const std::string& what) {
  if (ok) return;
  if (!rep.config.exploratory) throw PreconditionError(rep.name + ": " + what);
  rep.notes.push_back("outside window: " + what);
}

inline void require_certified(const ZeroTable& tab, std::int64_t last, const std::string& who) {
  if (!tab.certified_through(last)) {
    throw UncertifiedRange(who + ": needs Gram index " + std::to_string(last) + ", certified through " +
                           std::to_string(tab.certified_gram()));
  }
}

// M in [N^{alpha + 0.9 eps}, N^{alpha + eps}]
inline void require_short_range(MomentReport& rep) {
  const auto& c = rep.config;
  const double lo = std::pow(static_cast<double>(c.N), kAlpha + 0.9 * c.epsilon);
  const double hi = std::pow(static_cast<double>(c.N), kAlpha + c.epsilon);
  require_regime(rep, static_cast<double>(c.M) >= lo && static_cast<double>(c.M) <= hi,
                 "M = " + std::to_string(c.M) + " not in [N^(alpha+0.9eps), N^(alpha+eps)] = [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

inline void set_bound(MomentReport& rep, double log_bound, bool strict) {
  rep.has_bound = true;
  rep.log_bound = log_bound;
  rep.bound = std::exp(log_bound);
  const double mag = std::abs(rep.sum);
  if (mag == 0) {
    rep.bound_satisfied = true;
  } else {
    const double lm = std::log(mag);
    rep.bound_satisfied = strict ? lm < log_bound : lm <= log_bound;
  }
}

inline void set_main_term(MomentReport& rep, double main) {
  rep.has_main_term = true;
  rep.main_term = main;
  rep.ratio = main != 0 ? rep.sum / main : 0;
}

// b^e in int64, throwing when the moment leaves the exact range.
inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) throw PrecisionError("moment term overflows int64");
  }
  return r;
}

inline std::int64_t iadd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw PrecisionError("moment sum overflows int64");
  return r;
}

inline void set_exact(MomentReport& rep, std::int64_t s) {
  rep.integer = true;
  rep.exact_sum = s;
  rep.sum = static_cast<double>(s);
}

inline double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace gramlab::detail
