#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <thread>
#include <vector>

namespace gramlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr long double kPiL = std::numbers::pi_v<long double>;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

/// Runs body(begin, end, chunk) on `threads` contiguous chunks of [0, n).
/// Chunk boundaries depend only on n and threads, so per-chunk results are
/// reproducible; callers merge chunks in index order.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * static_cast<std::size_t>(threads)) {
    body(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t step = (n + threads - 1) / threads;
  for (unsigned c = 0; c < threads; ++c) {
    const std::size_t lo = std::min(n, c * step);
    const std::size_t hi = std::min(n, lo + step);
    pool.emplace_back([&body, lo, hi, c] { body(lo, hi, c); });
  }
  for (auto& th : pool) th.join();
}

/// Reduce x to (-pi, pi] in extended precision.
inline long double reduce_angle(long double x) {
  constexpr long double two_pi = 2 * kPiL;
  return x - two_pi * std::nearbyint(x / two_pi);
}

}  // namespace gramlab
