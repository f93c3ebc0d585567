#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "recip/matrix.hpp"

namespace recip {

/// Minimum improvement in |a_ij - w_i/w_j| that counts as strict.
inline constexpr double kStrictMargin = 1e-12;

/// True iff `candidate` Pareto-dominates `w` for `a`: no entrywise deviation
/// |a_ij - ratio_ij| gets worse, and at least one improves by more than
/// kStrictMargin.
///
/// "No worse" tolerates rounding noise of a few ulps of the compared
/// quantities (capped below kStrictMargin), so rescaling a subset of
/// components leaves untouched ratios comparing equal. The relation stays
/// irreflexive and asymmetric.
inline bool pareto_dominates(const ReciprocalMatrix& a, const PositiveVector& w,
                             const PositiveVector& candidate) {
  const std::size_t n = a.size();
  if (w.size() != n || candidate.size() != n) {
    throw InputError("vector length does not match matrix order");
  }
  constexpr double kUlps = 64.0 * std::numeric_limits<double>::epsilon();
  bool strict = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double old_ratio = w[i] / w[j];
      const double new_ratio = candidate[i] / candidate[j];
      const double old_dev = std::abs(a(i, j) - old_ratio);
      const double new_dev = std::abs(a(i, j) - new_ratio);
      const double slack = std::min(
          kUlps * std::max({1.0, a(i, j), old_ratio, new_ratio}),
          0.5 * kStrictMargin);
      if (new_dev > old_dev + slack) return false;
      if (new_dev < old_dev - kStrictMargin) strict = true;
    }
  }
  return strict;
}

}  // namespace recip
