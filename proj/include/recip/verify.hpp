#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "recip/digraph.hpp"
#include "recip/efficiency.hpp"
#include "recip/extensions.hpp"
#include "recip/io.hpp"
#include "recip/matrix.hpp"
#include "recip/pareto.hpp"
#include "recip/perron.hpp"
#include "recip/reference.hpp"
#include "recip/sweep.hpp"
#include "recip/z_family.hpp"

namespace recip {

struct CheckFailure {
  std::string id;
  std::string detail;
};

struct VerificationSummary {
  std::string suite;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  double eps_rel = kDefaultEdgeEps;
  // Region predicate under test; replaceable so the harness itself can be
  // mutation-tested.
  std::function<RegionVerdict(const ZParams&)> region = guarantee_n5plus;
};

inline std::vector<std::string> suite_names() {
  return {"worked-example", "source-example", "no-source", "regions",
          "lemmas",         "identities",     "hamiltonian", "predicates"};
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(VerificationSummary& s) : s_(s) {}

  bool check(bool ok, std::string_view id, const std::string& detail = {}) {
    ++s_.checks;
    if (!ok) s_.failures.push_back({std::string(id), detail});
    return ok;
  }

 private:
  VerificationSummary& s_;
};

inline std::string describe(const ZParams& p) {
  std::ostringstream os;
  os << "n=" << p.n << " (x,y,z,a)=(" << p.x << "," << p.y << "," << p.z << "," << p.a << ")";
  return os.str();
}

inline double max_abs_diff(std::span<const double> l, std::span<const double> r) {
  double m = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) m = std::max(m, std::abs(l[i] - r[i]));
  return m;
}

inline void certificate_check(Recorder& rec, const ReciprocalMatrix& a,
                              const PositiveVector& w, double eps, std::string_view id,
                              const std::string& where) {
  const auto cert = dominating_vector(a, w, eps);
  rec.check(cert && pareto_dominates(a, w, *cert), id, where);
}

inline void worked_example(Recorder& rec, const SuiteOptions& o) {
  const auto b = reference::ordering_base();
  const auto wb = perron(b).vector;
  const auto printed_w = reference::ordering_base_perron();
  rec.check(max_abs_diff(wb.values(), printed_w) <= 5e-4, "worked/perron-base",
            "max deviation " + format_double(max_abs_diff(wb.values(), printed_w)));

  const auto d = reference::ordering_scaling();
  const auto scaled = monomial_similarity(b, MonomialTransform::diagonal(d));
  const auto printed = reference::ordering_scaled_printed();
  double dev = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) dev = std::max(dev, std::abs(scaled(i, j) - printed(i, j)));
  rec.check(dev <= 1e-3, "worked/scaled-entries", "max deviation " + format_double(dev));

  const auto scaled_report = analyze(printed, std::nullopt, o.eps_rel);
  rec.check(!scaled_report.efficient, "worked/scaled-perron-inefficient",
            "computed digraph has " + std::to_string(scaled_report.scc_count) +
                " strong component(s)");
  rec.check(analyze(printed, PositiveVector::ones(5), o.eps_rel).efficient,
            "worked/scaled-ones-efficient");
  const double gap = printed.row_sum(0) - printed.row_sum(4);
  rec.check(well_behaved_type_I(printed) && std::abs(gap - 5.79) <= 1e-12,
            "worked/scaled-well-behaved", "r1 - r5 = " + format_double(gap));

  const auto ext = constant_row_sum_extension(printed);
  const auto ext_perron = perron(ext.matrix);
  rec.check(ext.perron_check <= 1e-10 &&
                max_abs_diff(ext_perron.vector.values(), std::vector<double>(6, 1.0)) <= 1e-9,
            "worked/extension-ones-perron",
            "row-sum residual " + format_double(ext.perron_check));
  rec.check(is_extension(ext.matrix, printed), "worked/extension-prefix");

  const auto conj = conjugated_extension(b, d);
  rec.check(remove_index(conj.matrix, 5) == b, "worked/conjugated-prefix-exact");
  const auto v = perron(conj.matrix).vector;
  const auto expected_v = reference::ordering_extension_perron();
  rec.check(max_abs_diff(v.values(), expected_v) <= 1e-9, "worked/conjugated-perron",
            "max deviation " + format_double(max_abs_diff(v.values(), expected_v)));
  rec.check(analyze(conj.matrix, std::nullopt, o.eps_rel).efficient, "worked/conjugated-efficient");
  rec.check(!order_preservation_check(b, conj.matrix).preserved, "worked/ordering-changes");
}

inline void source_example(Recorder& rec, const SuiteOptions& o) {
  const auto a = reference::source_example();
  const auto w = reference::source_example_vector();
  const auto g = build_digraph(a, w, o.eps_rel);
  const std::vector<Edge> expected{{1, 0}, {2, 0}, {2, 1}};
  rec.check(g.edges() == expected, "source/edges");
  rec.check(sources(g) == std::vector<std::size_t>{2}, "source/sources");
  certificate_check(rec, a, w, o.eps_rel, "source/certificate", "3x3 source example");
}

inline void no_source(Recorder& rec, const SuiteOptions& o) {
  std::mt19937_64 seeds(o.seed);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(k % 6);
    const auto a = random_reciprocal(n, seeds(), std::log(9.0));
    const auto g = build_digraph(a, perron(a).vector, o.eps_rel);
    rec.check(sources(g).empty(), "no-source/random",
              "sample " + std::to_string(k) + " n=" + std::to_string(n));
    rec.check(missing_in_edge_witness_failures(g).empty(), "no-source/witness",
              "sample " + std::to_string(k) + " n=" + std::to_string(n));
  }
  for (int base = 0; base < 20; ++base) {
    const std::size_t n = 3 + static_cast<std::size_t>(base % 6);
    const auto a = random_reciprocal(n, seeds(), std::log(9.0));
    const auto rep = extension_source_scan(a, 50, seeds(), o.eps_rel);
    rec.check(rep.with_source == 0 && rep.witness_failures == 0, "no-source/extensions",
              "base " + std::to_string(base) + ": " + std::to_string(rep.with_source) +
                  " extensions with a source");
  }
}

inline void regions(Recorder& rec, const SuiteOptions& o) {
  for (std::size_t n : {5u, 6u}) {
    std::vector<std::string> labels;
    for (const auto& row : grid_sweep(n, default_axis(), o.eps_rel)) {
      const auto& p = row.params;
      const auto verdict = o.region(p);
      const std::string where = describe(p);
      rec.check(row.agrees, "regions/sink-characterization", where);
      rec.check(!(verdict.guaranteed_efficient && !row.efficient), "regions/soundness", where);
      if (verdict.matched_exception) labels.push_back(*verdict.matched_exception);
      if (!row.efficient) {
        const auto z = z_matrix(p);
        certificate_check(rec, z, perron(z).vector, o.eps_rel, "regions/certificate", where);
      }
    }
    for (const char* t : {"T5", "T6", "T7", "T8"}) {
      for (const char* c : {"(i)", "(ii)", "(iii)"}) {
        const std::string label = std::string(t) + c;
        rec.check(std::find(labels.begin(), labels.end(), label) != labels.end(),
                  "regions/label-coverage", label + " at n=" + std::to_string(n));
      }
    }
  }
}

inline void for_grid(std::size_t n, const std::function<void(const ZParams&)>& fn) {
  const auto axis = default_axis();
  for (double x : axis)
    for (double y : axis)
      for (double z : axis)
        for (double a : axis) fn(ZParams{n, x, y, z, a});
}

inline void lemmas(Recorder& rec, const SuiteOptions& o) {
  for (std::size_t n : {5u, 6u, 7u}) {
    for_grid(n, [&](const ZParams& p) {
      const auto z = z_matrix(p);
      const auto g = build_digraph(z, perron(z).vector, o.eps_rel);
      for (const auto& pe : predicted_edges(p)) {
        rec.check(g.has_edge(pe.edge.first, pe.edge.second), "lemmas/predicted-edge",
                  describe(p) + " clause " + pe.clause);
      }
      rec.check(forbidden_reverse_edges(p, g).empty(), "lemmas/forbidden-reverse", describe(p));
    });
  }
}

inline void identities(Recorder& rec, const SuiteOptions&) {
  for (std::size_t n : {5u, 6u, 7u}) {
    for_grid(n, [&](const ZParams& p) {
      const auto pp = perron(z_matrix(p));
      const auto res = eigen_identity_residuals(p, pp);
      rec.check(res.max_derived() <= 1e-9 * pp.value, "identities/derived",
                describe(p) + " residual " + format_double(res.max_derived()));
      rec.check(res.middle_collapse <= 1e-10 * pp.vector[2], "identities/middle-collapse",
                describe(p));
    });
  }
}

inline void hamiltonian(Recorder& rec, const SuiteOptions& o) {
  std::mt19937_64 seeds(o.seed + 1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(k % 5);
    const auto a = random_reciprocal(n, seeds(), std::log(9.0));
    const auto w = perron(a).vector;
    const auto g = build_digraph(a, w, o.eps_rel);
    const bool connected = strongly_connected(g).strongly_connected;
    rec.check(connected == hamiltonian_cycle(g).has_value(), "hamiltonian/equivalence",
              "sample " + std::to_string(k));
    if (!connected) certificate_check(rec, a, w, o.eps_rel, "hamiltonian/certificate",
                                      "sample " + std::to_string(k));
  }
}

inline void predicates(Recorder& rec, const SuiteOptions& o) {
  std::mt19937_64 gen(o.seed + 2);
  std::uniform_real_distribution<double> u(-std::log(8.0), std::log(8.0));
  for (int k = 0; k < 1000; ++k) {
    const double x = std::exp(u(gen)), y = std::exp(u(gen)), z = std::exp(u(gen));
    rec.check(guarantee_n4(x, y, z, N4Form::six_cases) ==
                  guarantee_n4(x, y, z, N4Form::region_complement),
              "predicates/n4-forms", "sample " + std::to_string(k));
  }
  const auto axis = default_axis();
  for (double x : axis)
    for (double y : axis)
      for (double z : axis) {
        const ZParams p{5, x, y, z, 1.0};
        rec.check(guarantee_a1(5, x, y, z).guaranteed_efficient ==
                      o.region(p).guaranteed_efficient,
                  "predicates/a1-slice", describe(p));
      }
}

}  // namespace detail

/// Runs one named suite, or every suite for "all". Failures are collected,
/// never thrown.
inline VerificationSummary verify_suite(std::string_view name, const SuiteOptions& opts = {}) {
  VerificationSummary s;
  s.suite = std::string(name);
  detail::Recorder rec(s);
  const auto start = std::chrono::steady_clock::now();
  const bool all = name == "all";
  bool known = all;
  auto run = [&](std::string_view suite, auto&& fn) {
    if (all || name == suite) {
      known = true;
      fn(rec, opts);
    }
  };
  run("worked-example", detail::worked_example);
  run("source-example", detail::source_example);
  run("no-source", detail::no_source);
  run("regions", detail::regions);
  run("lemmas", detail::lemmas);
  run("identities", detail::identities);
  run("hamiltonian", detail::hamiltonian);
  run("predicates", detail::predicates);
  if (!known) throw InputError("unknown suite '" + std::string(name) + "'");
  s.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace recip
