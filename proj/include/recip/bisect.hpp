#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "recip/error.hpp"

namespace recip {

/// Root of a strictly decreasing f on [lo, hi] with f(lo) > 0 > f(hi),
/// by bisection until the bracket is narrower than `abs_tol` (or stops
/// shrinking in floating point).
template <class F>
double bisect_decreasing(F&& f, double lo, double hi, double abs_tol,
                         std::size_t max_iter = 400) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
    throw ConvergenceError("bisection bracket does not straddle a root",
                           std::min(std::abs(f_lo), std::abs(f_hi)));
  }
  for (std::size_t it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= abs_tol || mid <= lo || mid >= hi) return mid;
    const double f_mid = f(mid);
    if (f_mid > f_lo) {
      throw ConvergenceError("function is not decreasing on the bracket", f_mid);
    }
    if (f_mid == 0.0) return mid;
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection exceeded its iteration budget", hi - lo);
}

}  // namespace recip
