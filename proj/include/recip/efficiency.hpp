#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "recip/digraph.hpp"
#include "recip/matrix.hpp"
#include "recip/pareto.hpp"
#include "recip/perron.hpp"

namespace recip {

/// A Pareto-improving replacement for `w` when G_{A,w} is not strongly
/// connected, none otherwise.
///
/// Takes the source component S of the condensation that contains the lowest
/// vertex. No edge enters S, so w_i / w_j > a_ij for i in S, j outside. All of
/// S is scaled by beta = max a_ij w_j / w_i < 1; every crossing deviation
/// shrinks, the maximizing one to zero, and all other ratios are unchanged.
inline std::optional<PositiveVector> dominating_vector(const ReciprocalMatrix& a,
                                                       const PositiveVector& w,
                                                       double eps_rel = kDefaultEdgeEps) {
  const auto g = build_digraph(a, w, eps_rel);
  const auto scc = strongly_connected(g);
  if (scc.strongly_connected) return std::nullopt;

  const std::size_t n = a.size();
  std::vector<bool> has_incoming(scc.count, false);
  for (const auto& [i, j] : g.edges())
    if (scc.labels[i] != scc.labels[j]) has_incoming[scc.labels[j]] = true;
  std::size_t source_label = scc.count;
  for (std::size_t v = 0; v < n && source_label == scc.count; ++v)
    if (!has_incoming[scc.labels[v]]) source_label = scc.labels[v];

  double beta = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (scc.labels[i] != source_label) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (scc.labels[j] != source_label) beta = std::max(beta, a(i, j) * w[j] / w[i]);
  }
  std::vector<double> out(w.begin(), w.end());
  for (std::size_t i = 0; i < n; ++i)
    if (scc.labels[i] == source_label) out[i] *= beta;
  return PositiveVector(std::move(out));
}

struct EfficiencyReport {
  bool efficient = false;
  std::optional<double> perron_value;  // set when the Perron vector was used
  PositiveVector vector;
  std::vector<Edge> edges;
  std::size_t scc_count = 0;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  std::optional<std::vector<std::size_t>> hamiltonian;
  std::optional<PositiveVector> certificate;
  double eps_rel = kDefaultEdgeEps;
};

/// Full efficiency analysis of `w` (the Perron vector when absent).
inline EfficiencyReport analyze(const ReciprocalMatrix& a,
                                const std::optional<PositiveVector>& w = std::nullopt,
                                double eps_rel = kDefaultEdgeEps) {
  EfficiencyReport rep;
  rep.eps_rel = eps_rel;
  if (w) {
    rep.vector = *w;
  } else {
    const auto pp = perron(a);
    rep.perron_value = pp.value;
    rep.vector = pp.vector;
  }
  const auto g = build_digraph(a, rep.vector, eps_rel);
  const auto scc = strongly_connected(g);
  rep.efficient = scc.strongly_connected;
  rep.scc_count = scc.count;
  rep.edges = g.edges();
  rep.sources = sources(g);
  rep.sinks = sinks(g);
  if (a.size() <= kMaxHamiltonianOrder) rep.hamiltonian = hamiltonian_cycle(g);
  rep.certificate = dominating_vector(a, rep.vector, eps_rel);
  return rep;
}

}  // namespace recip
