#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "recip/error.hpp"
#include "recip/matrix.hpp"

namespace recip {

struct PerronPair {
  double value = 0.0;      // Perron eigenvalue r
  PositiveVector vector;   // w with w[0] == 1
  double residual = 0.0;   // max |(A w - r w)_i|
  std::size_t iterations = 0;
};

struct PerronOptions {
  double tol = 1e-14;
  std::size_t max_iter = 100000;
};

/// Power iteration from the all-ones vector, renormalizing so the first
/// component is one. Stops when successive iterates differ by less than
/// tol * max_i w_i in max norm.
inline PerronPair perron(const ReciprocalMatrix& a, PerronOptions opts = {}) {
  if (!(opts.tol > 0.0)) throw InputError("perron tolerance must be positive");
  const std::size_t n = a.size();
  std::vector<double> w(n, 1.0);
  std::vector<double> next;

  auto residual_of = [&](const std::vector<double>& v, double r) {
    const auto av = a.multiply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - r * v[i]));
    return res;
  };

  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    next = a.multiply(w);
    const double head = next[0];
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= head;
      diff = std::max(diff, std::abs(next[i] - w[i]));
      scale = std::max(scale, next[i]);
    }
    next[0] = 1.0;
    w.swap(next);
    if (diff < opts.tol * scale) {
      const double r = a.multiply(w)[0];
      return PerronPair{r, PositiveVector(w), residual_of(w, r), it};
    }
  }
  const double r = a.multiply(w)[0];
  throw ConvergenceError("power iteration did not converge", residual_of(w, r));
}

}  // namespace recip
