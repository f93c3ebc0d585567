#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "recip/error.hpp"

namespace recip {

/// Entrywise positive, finite vector. Used for priority vectors and
/// diagonal scalings alike.
class PositiveVector {
 public:
  PositiveVector() = default;

  explicit PositiveVector(std::vector<double> values) : v_(std::move(values)) {
    if (v_.empty()) throw InputError("positive vector must be non-empty");
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (!std::isfinite(v_[i]) || !(v_[i] > 0.0)) {
        throw InputError("vector entry " + std::to_string(i + 1) +
                         " is not a positive finite number");
      }
    }
  }

  PositiveVector(std::initializer_list<double> values)
      : PositiveVector(std::vector<double>(values)) {}

  static PositiveVector ones(std::size_t n) {
    return PositiveVector(std::vector<double>(n, 1.0));
  }

  std::size_t size() const noexcept { return v_.size(); }
  double operator[](std::size_t i) const { return v_[i]; }
  std::span<const double> values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  /// Positive multiple with first component equal to one.
  PositiveVector normalized() const {
    std::vector<double> out(v_);
    const double head = v_.front();
    for (double& x : out) x /= head;
    out.front() = 1.0;
    return PositiveVector(std::move(out));
  }

  friend bool operator==(const PositiveVector&, const PositiveVector&) = default;

 private:
  std::vector<double> v_;
};

enum class ReciprocityMode { validate, symmetrize };

/// Positive n x n matrix with unit diagonal and a_ji = 1 / a_ij.
///
/// Only the strict upper triangle is authoritative: every constructor stores
/// the lower triangle as the reciprocal of the upper one, so edge decisions
/// for (i,j) and (j,i) always see the same data.
class ReciprocalMatrix {
 public:
  ReciprocalMatrix() = default;

  static ReciprocalMatrix ones(std::size_t n) {
    check_order(n);
    return ReciprocalMatrix(n, std::vector<double>(n * n, 1.0));
  }

  /// Builds from a callable giving the strictly upper entries a_ij, i < j.
  template <class UpperFn>
  static ReciprocalMatrix from_upper(std::size_t n, UpperFn&& upper) {
    check_order(n);
    std::vector<double> data(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = upper(i, j);
        if (!std::isfinite(v) || !(v > 0.0)) {
          throw InputError("entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) +
                           ") is not a positive finite number");
        }
        data[i * n + j] = v;
        data[j * n + i] = 1.0 / v;
      }
    }
    return ReciprocalMatrix(n, std::move(data));
  }

  /// Validates a square positive array. In validate mode the array must be
  /// reciprocal within `tol` (relative) with an exact unit diagonal; in
  /// symmetrize mode the lower triangle and diagonal are overwritten.
  static ReciprocalMatrix from_rows(const std::vector<std::vector<double>>& raw,
                                    ReciprocityMode mode, double tol = 1e-12) {
    const std::size_t n = raw.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n) {
        throw InputError("matrix is not square: row " + std::to_string(i + 1) +
                         " has " + std::to_string(raw[i].size()) +
                         " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double v = raw[i][j];
        if (!std::isfinite(v) || !(v > 0.0)) {
          throw InputError("entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) +
                           ") is not a positive finite number");
        }
      }
    }
    if (mode == ReciprocityMode::validate) {
      for (std::size_t i = 0; i < n; ++i) {
        if (raw[i][i] != 1.0) {
          throw InputError("diagonal entry " + std::to_string(i + 1) +
                           " is not 1");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          if (std::abs(raw[i][j] * raw[j][i] - 1.0) > tol) {
            throw InputError("reciprocity violated at (" +
                             std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
          }
        }
      }
    }
    return from_upper(n, [&](std::size_t i, std::size_t j) { return raw[i][j]; });
  }

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(a_).subspan(i * n_, n_);
  }

  double row_sum(std::size_t i) const {
    const auto r = row(i);
    return std::accumulate(r.begin(), r.end(), 0.0);
  }

  std::vector<double> row_sums() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = row_sum(i);
    return out;
  }

  std::vector<double> multiply(std::span<const double> v) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto r = row(i);
      out[i] = std::inner_product(r.begin(), r.end(), v.begin(), 0.0);
    }
    return out;
  }

  std::vector<std::vector<double>> to_rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  friend bool operator==(const ReciprocalMatrix&, const ReciprocalMatrix&) = default;

 private:
  ReciprocalMatrix(std::size_t n, std::vector<double> data)
      : n_(n), a_(std::move(data)) {}

  static void check_order(std::size_t n) {
    if (n < 2) throw InputError("reciprocal matrix order must be at least 2");
  }

  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline ReciprocalMatrix make_reciprocal(const std::vector<std::vector<double>>& raw,
                                        ReciprocityMode mode, double tol = 1e-12) {
  return ReciprocalMatrix::from_rows(raw, mode, tol);
}

/// The consistent matrix v v^{-1}.
inline ReciprocalMatrix consistent_from_vector(const PositiveVector& v) {
  return ReciprocalMatrix::from_upper(
      v.size(), [&](std::size_t i, std::size_t j) { return v[i] / v[j]; });
}

/// True iff |a_ij a_jk - a_ik| <= tol * a_ik over all triples.
inline bool is_consistent(const ReciprocalMatrix& a, double tol) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(a(i, j) * a(j, k) - a(i, k)) > tol * a(i, k)) return false;
  return true;
}

/// Q = diag * permutation, acting by (Qv)[perm[i]] = diag[perm[i]] * v[i].
class MonomialTransform {
 public:
  MonomialTransform(std::vector<std::size_t> perm, std::vector<double> diag)
      : perm_(std::move(perm)), diag_(std::move(diag)), inverse_(perm_.size()) {
    if (perm_.size() != diag_.size()) {
      throw InputError("permutation and diagonal lengths differ");
    }
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] >= perm_.size() || seen[perm_[i]]) {
        throw InputError("permutation is not a bijection");
      }
      seen[perm_[i]] = true;
      inverse_[perm_[i]] = i;
    }
    for (double d : diag_) {
      if (!std::isfinite(d) || !(d > 0.0)) {
        throw InputError("diagonal scaling entries must be positive");
      }
    }
  }

  static MonomialTransform identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return {std::move(p), std::vector<double>(n, 1.0)};
  }

  static MonomialTransform diagonal(const PositiveVector& d) {
    auto t = identity(d.size());
    t.diag_.assign(d.begin(), d.end());
    return t;
  }

  /// Pure permutation exchanging indices i and j.
  static MonomialTransform swap(std::size_t n, std::size_t i, std::size_t j) {
    auto t = identity(n);
    std::swap(t.perm_[i], t.perm_[j]);
    std::swap(t.inverse_[i], t.inverse_[j]);
    return t;
  }

  std::size_t size() const noexcept { return perm_.size(); }
  std::size_t image(std::size_t i) const { return perm_[i]; }
  std::size_t preimage(std::size_t k) const { return inverse_[k]; }
  double scale(std::size_t k) const { return diag_[k]; }

  PositiveVector apply(const PositiveVector& v) const {
    if (v.size() != size()) throw InputError("transform dimension mismatch");
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[perm_[i]] = diag_[perm_[i]] * v[i];
    return PositiveVector(std::move(out));
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<double> diag_;
  std::vector<std::size_t> inverse_;
};

/// Q A Q^{-1}. Entry (perm[i], perm[j]) of the result is
/// diag[perm[i]] * a_ij / diag[perm[j]].
inline ReciprocalMatrix monomial_similarity(const ReciprocalMatrix& a,
                                            const MonomialTransform& q) {
  if (q.size() != a.size()) throw InputError("transform dimension mismatch");
  return ReciprocalMatrix::from_upper(a.size(), [&](std::size_t k, std::size_t l) {
    return q.scale(k) * a(q.preimage(k), q.preimage(l)) / q.scale(l);
  });
}

/// Upper entries exp(u), u ~ U[-log_scale, log_scale], from a generator seeded
/// with `seed` only.
inline ReciprocalMatrix random_reciprocal(std::size_t n, std::uint64_t seed,
                                          double log_scale) {
  if (!(log_scale >= 0.0)) throw InputError("log_scale must be non-negative");
  if (log_scale == 0.0) return ReciprocalMatrix::ones(n);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-log_scale, log_scale);
  return ReciprocalMatrix::from_upper(
      n, [&](std::size_t, std::size_t) { return std::exp(u(gen)); });
}

}  // namespace recip
