#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "recip/bisect.hpp"
#include "recip/digraph.hpp"
#include "recip/error.hpp"
#include "recip/matrix.hpp"
#include "recip/perron.hpp"

namespace recip {

/// C with row and column `i` (0-based) removed.
inline ReciprocalMatrix remove_index(const ReciprocalMatrix& c, std::size_t i) {
  const std::size_t n = c.size();
  if (i >= n) throw InputError("index out of range");
  if (n < 3) throw InputError("removing an index needs order at least 3");
  auto src = [i](std::size_t k) { return k < i ? k : k + 1; };
  return ReciprocalMatrix::from_upper(
      n - 1, [&](std::size_t r, std::size_t s) { return c(src(r), src(s)); });
}

/// True iff B with its last row and column removed equals A within `tol`.
inline bool is_extension(const ReciprocalMatrix& b, const ReciprocalMatrix& a,
                         double tol = 0.0) {
  if (b.size() != a.size() + 1) throw InputError("extension order must be one more");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(b(i, j) - a(i, j)) > tol) return false;
  return true;
}

/// Well-behaved of type I: first row sum exceeds the last by more than one.
inline bool well_behaved_type_I(const ReciprocalMatrix& a) {
  return a.row_sum(0) - a.row_sum(a.size() - 1) > 1.0;
}

struct ExtensionResult {
  ReciprocalMatrix matrix;              // order n + 1
  double target_sum = 0.0;              // common row sum s
  std::vector<double> appended_column;  // s - r_i, i < n
  double perron_check = 0.0;            // max |(B e - s e)_i|
};

namespace detail {

inline double max_row_sum_deviation(const ReciprocalMatrix& b, double s) {
  double dev = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) dev = std::max(dev, std::abs(b.row_sum(i) - s));
  return dev;
}

inline ReciprocalMatrix append_column(const ReciprocalMatrix& a,
                                      const std::vector<double>& column) {
  const std::size_t n = a.size();
  return ReciprocalMatrix::from_upper(n + 1, [&](std::size_t i, std::size_t j) {
    return j == n ? column[i] : a(i, j);
  });
}

}  // namespace detail

/// Extension with every row summing to the same s, so the all-ones vector is
/// its Perron vector with eigenvalue s.
///
/// Appending b_{i,n+1} = s - r_i fixes the first n rows; the last row sums to
/// 1 + sum 1/(s - r_i), and s is the unique root of
/// f(s) = 1 + sum 1/(s - r_i) - s on (max r_i, inf), where f falls from +inf
/// to -inf.
inline ExtensionResult constant_row_sum_extension(const ReciprocalMatrix& a) {
  const auto sums = a.row_sums();
  const double top = *std::max_element(sums.begin(), sums.end());
  auto f = [&](double s) {
    double acc = 1.0;
    for (double r : sums) acc += 1.0 / (s - r);
    return acc - s;
  };
  const double lo = top + 1e-9;
  double hi = top + static_cast<double>(a.size()) + 1.0;
  while (!(f(hi) < 0.0)) hi = top + 2.0 * (hi - top);
  const double s = bisect_decreasing(f, lo, hi, 1e-13);

  ExtensionResult out;
  out.target_sum = s;
  out.appended_column.reserve(a.size());
  for (double r : sums) out.appended_column.push_back(s - r);
  out.matrix = detail::append_column(a, out.appended_column);
  out.perron_check = detail::max_row_sum_deviation(out.matrix, s);
  return out;
}

struct ConjugatedExtension {
  ReciprocalMatrix matrix;        // extension of the original matrix
  ExtensionResult scaled;         // constant-row-sum extension of D A D^{-1}
  PositiveVector perron_vector;   // (D^{-1} (+) [1]) e, first component 1
};

/// Scales A to D A D^{-1}, extends that with constant row sums, and maps the
/// extension back with (D^{-1} (+) [1]). The leading block of the result is
/// A itself; only the appended column goes through the scaling.
inline ConjugatedExtension conjugated_extension(const ReciprocalMatrix& a,
                                                const PositiveVector& d) {
  const std::size_t n = a.size();
  if (d.size() != n) throw InputError("diagonal length does not match matrix order");
  ConjugatedExtension out;
  out.scaled = constant_row_sum_extension(monomial_similarity(a, MonomialTransform::diagonal(d)));
  std::vector<double> column(n);
  for (std::size_t i = 0; i < n; ++i) column[i] = out.scaled.appended_column[i] / d[i];
  out.matrix = detail::append_column(a, column);

  std::vector<double> v(n + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 / d[i];
  out.perron_vector = PositiveVector(std::move(v)).normalized();
  return out;
}

/// Extension with appended entries log-uniform in [1/9, 9].
template <class Gen>
ReciprocalMatrix random_extension(const ReciprocalMatrix& a, Gen& gen) {
  std::uniform_real_distribution<double> u(-std::log(9.0), std::log(9.0));
  std::vector<double> column(a.size());
  for (double& c : column) c = std::exp(u(gen));
  return detail::append_column(a, column);
}

struct ExtensionScanReport {
  std::size_t samples = 0;
  std::size_t with_source = 0;
  std::size_t witness_failures = 0;       // vertices failing the in-edge witness
  std::vector<std::size_t> violating_samples;
};

/// Draws random extensions of `a` and checks each Perron digraph for sources.
inline ExtensionScanReport extension_source_scan(const ReciprocalMatrix& a,
                                                 std::size_t samples,
                                                 std::uint64_t seed,
                                                 double eps_rel = kDefaultEdgeEps) {
  if (samples == 0) throw InputError("samples must be at least 1");
  std::mt19937_64 gen(seed);
  ExtensionScanReport rep;
  rep.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto b = random_extension(a, gen);
    const auto g = build_digraph(b, perron(b).vector, eps_rel);
    const bool has_source = !sources(g).empty();
    const auto failures = missing_in_edge_witness_failures(g).size();
    rep.with_source += has_source ? 1 : 0;
    rep.witness_failures += failures;
    if (has_source || failures != 0) rep.violating_samples.push_back(k);
  }
  return rep;
}

/// Dense descending ranks; consecutive values within tie_tol * max share a rank.
inline std::vector<std::size_t> weak_order_ranks(std::span<const double> values,
                                                 double tie_tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return values[l] > values[r]; });
  const double top = n ? values[order.front()] : 0.0;
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    const bool tie = values[order[k - 1]] - values[order[k]] <= tie_tol * std::abs(top);
    rank[order[k]] = rank[order[k - 1]] + (tie ? 0 : 1);
  }
  return rank;
}

struct OrderPreservation {
  bool preserved = false;
  std::vector<std::size_t> rank_base;
  std::vector<std::size_t> rank_extension_prefix;
};

/// Compares the weak ordering of the Perron weights of A with the first n
/// Perron weights of its extension B.
inline OrderPreservation order_preservation_check(const ReciprocalMatrix& a,
                                                  const ReciprocalMatrix& b,
                                                  double tie_tol = 1e-8) {
  if (b.size() != a.size() + 1) throw InputError("extension order must be one more");
  const auto wa = perron(a).vector;
  const auto wb = perron(b).vector;
  OrderPreservation out;
  out.rank_base = weak_order_ranks(wa.values(), tie_tol);
  out.rank_extension_prefix = weak_order_ranks(wb.values().first(a.size()), tie_tol);
  out.preserved = out.rank_base == out.rank_extension_prefix;
  return out;
}

}  // namespace recip
