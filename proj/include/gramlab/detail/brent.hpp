#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace gramlab {

// Brent's zeroin, returning the final sign-change bracket instead of a point.
template <class F>
std::pair<double, double> brent_bracket(F&& f, double a, double b, double fa, double fb, double tol) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (fa == 0) return {a, a};
  if (fb == 0) return {b, b};
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    // the returned bracket [b, c] has width 2 * tol1
    const double tol1 = 2 * eps * std::abs(b) + 0.5 * std::max(0.0, tol - 4 * eps * std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0) break;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2 * xm * s;
        q = 1 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2 * xm * qa * (qa - r) - (b - a) * (r - 1));
        q = (qa - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2 * p < std::min(3 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  if (fb == 0) return {b, b};
  return {std::min(b, c), std::max(b, c)};
}

}  // namespace gramlab
