#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "recip/error.hpp"
#include "recip/matrix.hpp"
#include "recip/perron.hpp"

namespace recip {

inline constexpr double kDefaultEdgeEps = 1e-9;

using Edge = std::pair<std::size_t, std::size_t>;  // 0-based (from, to)

/// G_{A,w}: vertices 0..n-1, edge (i,j) iff w_i / w_j >= a_ij (1 - eps_rel).
class EfficiencyDigraph {
 public:
  explicit EfficiencyDigraph(std::size_t n, double eps_rel = kDefaultEdgeEps)
      : n_(n), eps_rel_(eps_rel), adj_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  double eps_rel() const noexcept { return eps_rel_; }

  bool has_edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw InputError("self-loops are not allowed");
    adj_[i * n_ + j] = 1;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const EfficiencyDigraph& l, const EfficiencyDigraph& r) {
    return l.n_ == r.n_ && l.adj_ == r.adj_;
  }

 private:
  std::size_t n_;
  double eps_rel_;
  std::vector<char> adj_;
};

inline EfficiencyDigraph build_digraph(const ReciprocalMatrix& a, const PositiveVector& w,
                                       double eps_rel = kDefaultEdgeEps) {
  if (w.size() != a.size()) throw InputError("vector length does not match matrix order");
  if (!(eps_rel >= 0.0)) throw InputError("eps_rel must be non-negative");
  EfficiencyDigraph g(a.size(), eps_rel);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && w[i] / w[j] >= a(i, j) * (1.0 - eps_rel)) g.add_edge(i, j);
  return g;
}

struct SccResult {
  bool strongly_connected = false;
  std::size_t count = 0;
  // Component of each vertex; labels follow a topological order of the
  // condensation, so every edge between components goes from a lower label
  // to a higher one.
  std::vector<std::size_t> labels;
};

inline SccResult strongly_connected(const EfficiencyDigraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), emitted(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (!g.has_edge(v, u)) continue;
      if (index[u] == kUnvisited) {
        visit(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        emitted[u] = components;
      } while (u != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == kUnvisited) visit(v);

  // Tarjan completes a component only after everything reachable from it.
  SccResult out;
  out.count = components;
  out.strongly_connected = components == 1;
  out.labels.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.labels[v] = components - 1 - emitted[v];
  return out;
}

/// Vertices with no incoming edge.
inline std::vector<std::size_t> sources(const EfficiencyDigraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool incoming = false;
    for (std::size_t u = 0; u < g.size() && !incoming; ++u) incoming = g.has_edge(u, v);
    if (!incoming) out.push_back(v);
  }
  return out;
}

/// Vertices with no outgoing edge.
inline std::vector<std::size_t> sinks(const EfficiencyDigraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool outgoing = false;
    for (std::size_t u = 0; u < g.size() && !outgoing; ++u) outgoing = g.has_edge(v, u);
    if (!outgoing) out.push_back(v);
  }
  return out;
}

inline constexpr std::size_t kMaxHamiltonianOrder = 10;

/// Directed Hamiltonian cycle by backtracking from vertex 0, lowest index
/// first. Returns the vertex sequence starting at 0 (closing edge implied).
inline std::optional<std::vector<std::size_t>> hamiltonian_cycle(const EfficiencyDigraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxHamiltonianOrder) {
    throw InputError("hamiltonian search is limited to order " +
                     std::to_string(kMaxHamiltonianOrder));
  }
  if (n < 2) return std::nullopt;
  std::vector<std::size_t> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;

  std::function<bool()> extend = [&]() -> bool {
    const std::size_t last = path.back();
    if (path.size() == n) return g.has_edge(last, 0);
    for (std::size_t u = 1; u < n; ++u) {
      if (used[u] || !g.has_edge(last, u)) continue;
      used[u] = true;
      path.push_back(u);
      if (extend()) return true;
      path.pop_back();
      used[u] = false;
    }
    return false;
  };
  if (extend()) return path;
  return std::nullopt;
}

/// Vertices i that miss some incoming edge (k,i) but have no j with
/// (j,i) in E and (i,j) not in E. Empty for every Perron digraph.
inline std::vector<std::size_t> missing_in_edge_witness_failures(const EfficiencyDigraph& g) {
  std::vector<std::size_t> out;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool misses = false;
    for (std::size_t k = 0; k < n && !misses; ++k) misses = k != i && !g.has_edge(k, i);
    if (!misses) continue;
    bool witness = false;
    for (std::size_t j = 0; j < n && !witness; ++j)
      witness = j != i && g.has_edge(j, i) && !g.has_edge(i, j);
    if (!witness) out.push_back(i);
  }
  return out;
}

/// Builds the Perron digraph of `a` and checks both the in-edge witness
/// property and the absence of sources.
inline bool no_source_theorem_check(const ReciprocalMatrix& a,
                                    double eps_rel = kDefaultEdgeEps) {
  if (a.size() < 3) throw InputError("no-source check needs order at least 3");
  const auto g = build_digraph(a, perron(a).vector, eps_rel);
  return missing_in_edge_witness_failures(g).empty() && sources(g).empty();
}

}  // namespace recip
