#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recip/digraph.hpp"
#include "recip/error.hpp"
#include "recip/matrix.hpp"
#include "recip/perron.hpp"

namespace recip {

/// All-ones matrix of order n with a_{1,n-1}=y, a_{1,n}=x, a_{2,n-1}=a,
/// a_{2,n}=z and the matching reciprocals.
struct ZParams {
  std::size_t n = 5;
  double x = 1.0, y = 1.0, z = 1.0, a = 1.0;

  void validate(std::size_t min_order = 4) const {
    if (n < min_order) {
      throw InputError("Z family needs order at least " + std::to_string(min_order));
    }
    for (double v : {x, y, z, a}) {
      if (!std::isfinite(v) || !(v > 0.0)) throw InputError("Z parameters must be positive");
    }
  }

  friend bool operator==(const ZParams&, const ZParams&) = default;
};

inline ReciprocalMatrix z_matrix(const ZParams& p) {
  p.validate();
  const std::size_t n = p.n;
  return ReciprocalMatrix::from_upper(n, [&](std::size_t i, std::size_t j) {
    if (i == 0 && j == n - 2) return p.y;
    if (i == 0 && j == n - 1) return p.x;
    if (i == 1 && j == n - 2) return p.a;
    if (i == 1 && j == n - 1) return p.z;
    return 1.0;
  });
}

// ---------------------------------------------------------------------------
// Monomial symmetries of the family

enum class ZSymmetry { identity, swap_last, swap_first, swap_both };

inline constexpr std::array<ZSymmetry, 4> kZSymmetries = {
    ZSymmetry::identity, ZSymmetry::swap_last, ZSymmetry::swap_first, ZSymmetry::swap_both};

/// Parameters of Q Z Q^{-1} for the permutation Q of `s`:
/// swap_last  (n-1 <-> n)         -> (y, x, a, z)
/// swap_first (1 <-> 2)           -> (z, a, x, y)
/// swap_both  (both exchanges)    -> (a, z, y, x)
inline ZParams z_image(const ZParams& p, ZSymmetry s) {
  switch (s) {
    case ZSymmetry::identity: return p;
    case ZSymmetry::swap_last: return {p.n, p.y, p.x, p.a, p.z};
    case ZSymmetry::swap_first: return {p.n, p.z, p.a, p.x, p.y};
    case ZSymmetry::swap_both: return {p.n, p.a, p.z, p.y, p.x};
  }
  return p;
}

inline MonomialTransform z_symmetry_transform(std::size_t n, ZSymmetry s) {
  switch (s) {
    case ZSymmetry::identity: return MonomialTransform::identity(n);
    case ZSymmetry::swap_last: return MonomialTransform::swap(n, n - 2, n - 1);
    case ZSymmetry::swap_first: return MonomialTransform::swap(n, 0, 1);
    case ZSymmetry::swap_both: {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      std::swap(perm[0], perm[1]);
      std::swap(perm[n - 2], perm[n - 1]);
      return {std::move(perm), std::vector<double>(n, 1.0)};
    }
  }
  return MonomialTransform::identity(n);
}

inline std::string to_string(ZSymmetry s) {
  switch (s) {
    case ZSymmetry::identity: return "identity";
    case ZSymmetry::swap_last: return "(y,x,a,z)";
    case ZSymmetry::swap_first: return "(z,a,x,y)";
    case ZSymmetry::swap_both: return "(a,z,y,x)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Eigen-equation residuals

struct NamedResidual {
  std::string name;
  double value = 0.0;  // signed residual
};

struct IdentityResiduals {
  double perron_value = 0.0;
  std::vector<NamedResidual> rows;     // the eigen equations themselves
  std::vector<NamedResidual> derived;  // pairwise combinations of rows
  double middle_collapse = 0.0;        // max |w_j - w_3|, 4 <= j <= n-2

  double max_row() const { return max_abs(rows); }
  double max_derived() const { return max_abs(derived); }

 private:
  static double max_abs(const std::vector<NamedResidual>& v) {
    double m = 0.0;
    for (const auto& r : v) m = std::max(m, std::abs(r.value));
    return m;
  }
};

/// Residuals of the row equations of (Z - rI) w = 0 and of the ten
/// differences between them, evaluated at the computed Perron pair. The
/// differences assume w_j = w_3 on the middle block, so they also probe that
/// collapse.
inline IdentityResiduals eigen_identity_residuals(const ZParams& p,
                                                  const PerronPair& pp) {
  p.validate(5);
  const std::size_t n = p.n;
  const auto& w = pp.vector;
  const double r = pp.value;
  const double x = p.x, y = p.y, z = p.z, a = p.a;
  const double w1 = w[0], w2 = w[1], w3 = w[2], wm = w[n - 2], wl = w[n - 1];
  double middle = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) middle += w[i];
  const double m = static_cast<double>(n - 4);

  IdentityResiduals out;
  out.perron_value = r;
  out.rows = {
      {"row 1", (1 - r) * w1 + w2 + middle + y * wm + x * wl},
      {"row 2", w1 + (1 - r) * w2 + middle + a * wm + z * wl},
      {"row n-1", w1 / y + w2 / a + middle + (1 - r) * wm + wl},
      {"row n", w1 / x + w2 / z + middle + wm + (1 - r) * wl},
  };
  for (std::size_t j = 2; j + 2 < n; ++j) {
    out.rows.push_back({"row " + std::to_string(j + 1),
                        w1 + w2 + middle - r * w[j] + wm + wl});
  }
  out.derived = {
      {"row1 - row2", r * (w2 - w1) + (y - a) * wm + (x - z) * wl},
      {"row1 - row3", r * (w3 - w1) + (y - 1) * wm + (x - 1) * wl},
      {"row1 - y*row(n-1)", r * (y * wm - w1) + (1 - y / a) * w2 + (1 - y) * m * w3 + (x - y) * wl},
      {"row1 - x*row(n)", r * (x * wl - w1) + (1 - x / z) * w2 + (1 - x) * m * w3 + (y - x) * wm},
      {"row2 - row3", r * (w3 - w2) + (a - 1) * wm + (z - 1) * wl},
      {"row2 - a*row(n-1)", r * (a * wm - w2) + (1 - a / y) * w1 + (1 - a) * m * w3 + (z - a) * wl},
      {"row2 - z*row(n)", r * (z * wl - w2) + (1 - z / x) * w1 + (1 - z) * m * w3 + (a - z) * wm},
      {"row3 - row(n-1)", r * (wm - w3) + (1 - 1 / y) * w1 + (1 - 1 / a) * w2},
      {"row3 - row(n)", r * (wl - w3) + (1 - 1 / x) * w1 + (1 - 1 / z) * w2},
      {"row(n-1) - row(n)", r * (wl - wm) + (1 / y - 1 / x) * w1 + (1 / a - 1 / z) * w2},
  };
  for (std::size_t j = 3; j + 2 < n; ++j) {
    out.middle_collapse = std::max(out.middle_collapse, std::abs(w[j] - w3));
  }
  return out;
}

inline IdentityResiduals eigen_identity_residuals(const ZParams& p) {
  return eigen_identity_residuals(p, perron(z_matrix(p)));
}

// ---------------------------------------------------------------------------
// Edges forced by the parameter order

struct PredictedEdge {
  Edge edge;           // 0-based
  std::string clause;  // "out k" or "in k", k = 1..10
};

/// Edges of G_{Z,w} (w the Perron vector) implied by the ordering of
/// 1, x, y, z, a alone. Clauses "out k" produce edges leaving 1, 2, n-1, n;
/// "in k" are their mirror images.
inline std::vector<PredictedEdge> predicted_edges(const ZParams& p) {
  p.validate(5);
  const std::size_t n = p.n;
  const double x = p.x, y = p.y, z = p.z, a = p.a;
  const std::size_t v1 = 0, v2 = 1, vm = n - 2, vl = n - 1;
  std::vector<PredictedEdge> out;
  auto add = [&](bool cond, std::size_t i, std::size_t j, const char* clause) {
    if (cond) out.push_back({{i, j}, clause});
  };
  auto add_middle = [&](bool cond, std::size_t fixed, bool outward, const char* clause) {
    if (!cond) return;
    for (std::size_t i = 2; i + 2 < n; ++i)
      out.push_back({outward ? Edge{fixed, i} : Edge{i, fixed}, clause});
  };
  using std::max;
  using std::min;

  add(a <= y && z <= x, v1, v2, "out 1");
  add(y <= min({1.0, a, x}), v1, vm, "out 2");
  add(x <= min({1.0, y, z}), v1, vl, "out 3");
  add(a <= min({1.0, y, z}), v2, vm, "out 4");
  add(z <= min({1.0, x, a}), v2, vl, "out 5");
  add(y <= x && a <= z, vm, vl, "out 6");
  add_middle(1.0 <= min(x, y), v1, true, "out 7");
  add_middle(1.0 <= min(a, z), v2, true, "out 8");
  add_middle(max(y, a) <= 1.0, vm, true, "out 9");
  add_middle(max(x, z) <= 1.0, vl, true, "out 10");

  add(y <= a && x <= z, v2, v1, "in 1");
  add(max({1.0, a, x}) <= y, vm, v1, "in 2");
  add(max({1.0, y, z}) <= x, vl, v1, "in 3");
  add(max({1.0, y, z}) <= a, vm, v2, "in 4");
  add(max({1.0, a, x}) <= z, vl, v2, "in 5");
  add(x <= y && z <= a, vl, vm, "in 6");
  add_middle(max(x, y) <= 1.0, v1, false, "in 7");
  add_middle(max(a, z) <= 1.0, v2, false, "in 8");
  add_middle(1.0 <= min(a, y), vm, false, "in 9");
  add_middle(1.0 <= min(x, z), vl, false, "in 10");
  return out;
}

struct ReverseEdgeViolation {
  Edge present;    // the edge whose presence triggers the clause
  Edge forbidden;  // the reverse edge that must be absent
};

/// Pairs (3,k),(k,3) that cannot both be edges because the equal-weight
/// condition w_k = w_3 would contradict the eigen equations. Returns the
/// violated clauses; empty on a correct digraph.
inline std::vector<ReverseEdgeViolation> forbidden_reverse_edges(const ZParams& p,
                                                                 const EfficiencyDigraph& g) {
  p.validate(5);
  const std::size_t n = p.n;
  if (g.size() != n) throw InputError("digraph order does not match parameters");
  const double x = p.x, y = p.y, z = p.z, a = p.a;
  const std::size_t v3 = 2;
  std::vector<ReverseEdgeViolation> out;
  auto check = [&](std::size_t k, bool cond) {
    if (cond && g.has_edge(v3, k) && g.has_edge(k, v3)) out.push_back({{v3, k}, {k, v3}});
  };
  check(1, std::max(a, z) <= 1.0 && a != z);
  check(0, std::max(x, y) <= 1.0 && x != y);
  check(n - 1, std::min(x, z) >= 1.0 && x != z);
  check(n - 2, std::min(y, a) >= 1.0 && a != y);
  return out;
}

// ---------------------------------------------------------------------------
// Region predicates

struct RegionVerdict {
  bool guaranteed_efficient = true;
  std::optional<std::string> matched_exception;  // e.g. "T5(i)"
  std::string reduction_used = "identity";
};

namespace detail {

/// Exception clauses for a representative whose x is the minimum.
inline std::optional<std::string> min_x_exception(const ZParams& q) {
  const double x = q.x, y = q.y, z = q.z, a = q.a;
  if (x < z && z < a && a < y && z < 1.0) return "i";
  if (x < y && y < a && a < z && 1.0 < a) return "ii";
  if (x <= a && a < 1.0 && 1.0 < std::min(y, z)) return "iii";
  return std::nullopt;
}

inline const char* theorem_label(ZSymmetry s) {
  switch (s) {
    case ZSymmetry::identity: return "T5";
    case ZSymmetry::swap_last: return "T6";
    case ZSymmetry::swap_first: return "T7";
    case ZSymmetry::swap_both: return "T8";
  }
  return "T?";
}

}  // namespace detail

/// Sufficient condition for an efficient Perron vector, n >= 5. The
/// parameters are moved by a monomial symmetry to the representative whose
/// x is the minimum (first match in identity, swap_last, swap_first,
/// swap_both order), then tested against the three exception clauses.
inline RegionVerdict guarantee_n5plus(const ZParams& p) {
  p.validate(5);
  const double lo = std::min({p.x, p.y, p.z, p.a});
  for (ZSymmetry s : kZSymmetries) {
    const ZParams q = z_image(p, s);
    if (q.x != lo) continue;
    RegionVerdict v;
    v.reduction_used = to_string(s);
    if (auto clause = detail::min_x_exception(q)) {
      v.guaranteed_efficient = false;
      v.matched_exception = std::string(detail::theorem_label(s)) + "(" + *clause + ")";
    }
    return v;
  }
  return {};  // unreachable: one image always carries the minimum first
}

/// The four region hypotheses taken verbatim. Two of them are
/// self-referential ("y <= min{a,y,z}", "a <= min{a,y,x}") and so are weaker
/// than the symmetry images used by guarantee_n5plus. Diagnostic only: this
/// reading is not sound.
inline bool literal_hypothesis(const ZParams& p, ZSymmetry s) {
  const double x = p.x, y = p.y, z = p.z, a = p.a;
  switch (s) {
    case ZSymmetry::identity: return x <= std::min({a, y, z});
    case ZSymmetry::swap_last: return y <= std::min({a, y, z});
    case ZSymmetry::swap_first: return z <= std::min({a, y, x});
    case ZSymmetry::swap_both: return a <= std::min({a, y, x});
  }
  return false;
}

/// Verdict when every theorem is applied under its literal hypothesis: the
/// point is guaranteed if some theorem's hypothesis holds and none of its
/// clauses match.
inline bool guarantee_literal(const ZParams& p) {
  p.validate(5);
  for (ZSymmetry s : kZSymmetries) {
    if (literal_hypothesis(p, s) && !detail::min_x_exception(z_image(p, s))) return true;
  }
  return false;
}

/// a = 1 slice, n >= 5.
inline RegionVerdict guarantee_a1(std::size_t n, double x, double y, double z) {
  ZParams{n, x, y, z, 1.0}.validate(5);
  RegionVerdict v;
  auto hit = [&](const char* clause) {
    v.guaranteed_efficient = false;
    v.matched_exception = std::string("T9(") + clause + ")";
  };
  if (1.0 < z && z < x && x < y) hit("i");
  else if (z < 1.0 && 1.0 < y && y < x) hit("ii");
  else if (z < x && x < y && y < 1.0) hit("iii");
  else if (x < z && z < 1.0 && 1.0 < y) hit("iv");
  return v;
}

enum class N4Form { six_cases, region_complement };

/// Sufficient condition for an efficient Perron vector of Z_4(x,y,z,1).
inline bool guarantee_n4(double x, double y, double z, N4Form form) {
  ZParams{4, x, y, z, 1.0}.validate(4);
  using std::max;
  using std::min;
  if (form == N4Form::six_cases) {
    return (y <= x && x <= z && y <= 1 && 1 <= z) ||
           (y <= x && y <= 1 && z <= 1 && z <= x) ||
           (1 <= y && y <= x && 1 <= z && z <= x) ||
           (z <= x && x <= y && 1 <= y && z <= 1) ||
           (x <= y && 1 <= y && 1 <= z && x <= z) ||
           (x <= y && y <= 1 && x <= z && z <= 1);
  }
  const double lo1 = min(1.0, x), hi1 = max(1.0, x);
  const double lo2 = min(y, z), hi2 = max(y, z);
  const bool distinct = x != 1.0 && y != z;
  const bool first = lo1 < lo2 && lo2 < hi1 && hi1 < hi2 && distinct;
  const bool second = lo2 < lo1 && lo1 < hi2 && hi2 < hi1 && distinct;
  return !first && !second;
}

// ---------------------------------------------------------------------------
// Sink characterization

struct SinkCheck {
  double perron_value = 0.0;
  bool efficient = false;
  bool sink_present = false;
  std::optional<std::size_t> sink_vertex;  // lowest sink, 0-based
  bool agrees = false;                     // efficient <=> no sink vertex
  // Same test with the middle block {3..n-2} treated as one vertex.
  bool block_sink_present = false;
  bool block_agrees = false;
};

inline SinkCheck sink_characterization(const ZParams& p, const PositiveVector& w,
                                       double perron_value,
                                       double eps_rel = kDefaultEdgeEps) {
  p.validate(5);
  const std::size_t n = p.n;
  const auto g = build_digraph(z_matrix(p), w, eps_rel);
  SinkCheck out;
  out.perron_value = perron_value;
  out.efficient = strongly_connected(g).strongly_connected;
  const auto s = sinks(g);
  out.sink_present = !s.empty();
  if (!s.empty()) out.sink_vertex = s.front();
  out.agrees = out.efficient != out.sink_present;

  auto is_middle = [&](std::size_t v) { return v >= 2 && v + 2 < n; };
  bool middle_leaks = false;
  for (std::size_t i = 2; i + 2 < n && !middle_leaks; ++i)
    for (std::size_t j = 0; j < n && !middle_leaks; ++j)
      middle_leaks = !is_middle(j) && g.has_edge(i, j);
  out.block_sink_present = !middle_leaks;
  for (std::size_t v : s) out.block_sink_present |= !is_middle(v);
  out.block_agrees = out.efficient != out.block_sink_present;
  return out;
}

inline SinkCheck sink_characterization(const ZParams& p, double eps_rel = kDefaultEdgeEps) {
  const auto pp = perron(z_matrix(p));
  return sink_characterization(p, pp.vector, pp.value, eps_rel);
}

}  // namespace recip
