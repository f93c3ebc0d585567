#include <gtest/gtest.h>

#include <cmath>

#include "recip/digraph.hpp"
#include "recip/efficiency.hpp"
#include "recip/pareto.hpp"
#include "recip/reference.hpp"
#include "recip/z_family.hpp"

using namespace recip;

TEST(Digraph, SourceExampleEdges) {
  const auto g = build_digraph(reference::source_example(), reference::source_example_vector());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(sources(g), std::vector<std::size_t>{2});
  EXPECT_EQ(sinks(g), std::vector<std::size_t>{0});
  EXPECT_FALSE(strongly_connected(g).strongly_connected);
  EXPECT_EQ(strongly_connected(g).count, 3u);
}

TEST(Digraph, EveryPairHasAnEdge) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto a = random_reciprocal(n, seed, std::log(9.0));
    const auto g = build_digraph(a, perron(a).vector);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_TRUE(g.has_edge(i, j) || g.has_edge(j, i));
  }
}

TEST(Digraph, ConsistentMatrixGivesCompleteDigraph) {
  const PositiveVector v{1.0, 0.3, 7.0, 2.0};
  const auto g = build_digraph(consistent_from_vector(v), v);
  EXPECT_EQ(g.edges().size(), 12u);
}

TEST(Digraph, ToleranceAdmitsNearTies) {
  // w_1/w_2 falls short of a_12 = 2 by a relative 1e-12.
  const auto a = make_reciprocal({{1, 2}, {0.5, 1}}, ReciprocityMode::validate);
  const PositiveVector w{2.0 * (1.0 - 1e-12), 1.0};
  EXPECT_TRUE(build_digraph(a, w).has_edge(0, 1));
  EXPECT_FALSE(build_digraph(a, w, 1e-14).has_edge(0, 1));
  EXPECT_THROW(build_digraph(a, w, -1.0), InputError);
  EXPECT_THROW(build_digraph(a, PositiveVector{1.0, 1.0, 1.0}), InputError);
}

TEST(Digraph, SccLabelsFollowCondensationOrder) {
  EfficiencyDigraph g(4);
  g.add_edge(3, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  const auto scc = strongly_connected(g);
  EXPECT_EQ(scc.count, 3u);
  EXPECT_EQ(scc.labels[2], scc.labels[3]);
  EXPECT_LT(scc.labels[2], scc.labels[0]);
  EXPECT_LT(scc.labels[0], scc.labels[1]);
}

TEST(Hamiltonian, Cases) {
  EfficiencyDigraph cycle(4);
  cycle.add_edge(0, 2);
  cycle.add_edge(2, 1);
  cycle.add_edge(1, 3);
  cycle.add_edge(3, 0);
  EXPECT_EQ(hamiltonian_cycle(cycle), (std::vector<std::size_t>{0, 2, 1, 3}));

  EfficiencyDigraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_FALSE(hamiltonian_cycle(path).has_value());

  // Strongly connected but not Hamiltonian: two triangles sharing vertex 0.
  EfficiencyDigraph bowtie(5);
  for (auto [i, j] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})
    bowtie.add_edge(i, j);
  EXPECT_TRUE(strongly_connected(bowtie).strongly_connected);
  EXPECT_FALSE(hamiltonian_cycle(bowtie).has_value());

  EXPECT_THROW(hamiltonian_cycle(EfficiencyDigraph(11)), InputError);
}

TEST(Hamiltonian, EquivalentToConnectivityOnPerronDigraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const auto a = random_reciprocal(n, seed, std::log(9.0));
    const auto g = build_digraph(a, perron(a).vector);
    EXPECT_EQ(strongly_connected(g).strongly_connected, hamiltonian_cycle(g).has_value());
  }
}

TEST(NoSource, PerronDigraphsHaveNone) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto a = random_reciprocal(3 + seed % 6, seed, std::log(9.0));
    EXPECT_TRUE(no_source_theorem_check(a));
  }
  EXPECT_THROW(no_source_theorem_check(ReciprocalMatrix::ones(2)), InputError);
}

TEST(NoSource, WitnessFailsOnSourceExample) {
  // Vertex 3 misses both incoming edges and has no witness.
  const auto g = build_digraph(reference::source_example(), reference::source_example_vector());
  EXPECT_EQ(missing_in_edge_witness_failures(g), std::vector<std::size_t>{2});
}

TEST(Pareto, IrreflexiveAndAsymmetric) {
  const auto a = reference::source_example();
  const auto w = reference::source_example_vector();
  EXPECT_FALSE(pareto_dominates(a, w, w));
  const PositiveVector better{1.0, 2.0, 2.0};
  EXPECT_TRUE(pareto_dominates(a, w, better));
  EXPECT_FALSE(pareto_dominates(a, better, w));
  EXPECT_THROW(pareto_dominates(a, w, PositiveVector{1.0, 1.0}), InputError);
}

TEST(Pareto, ScalingInvariant) {
  const auto a = reference::source_example();
  EXPECT_FALSE(pareto_dominates(a, {1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}));
}

TEST(Certificate, SourceExample) {
  const auto a = reference::source_example();
  const auto w = reference::source_example_vector();
  const auto cert = dominating_vector(a, w);
  ASSERT_TRUE(cert.has_value());
  // Source {3} scaled by beta = a_32 w_2 / w_3 = 2/3.
  EXPECT_NEAR((*cert)[2], 2.0, 1e-15);
  EXPECT_EQ((*cert)[0], 1.0);
  EXPECT_EQ((*cert)[1], 2.0);
  EXPECT_TRUE(pareto_dominates(a, w, *cert));
}

TEST(Certificate, AbsentForEfficientVectors) {
  const auto a = random_reciprocal(5, 9, std::log(9.0));
  EXPECT_FALSE(dominating_vector(a, perron(a).vector).has_value());
}

TEST(Certificate, InefficientZPoint) {
  // Inefficient grid point (oracle sweep): vertex 3 is a sink.
  const ZParams p{5, 0.25, 2, 2, 0.25};
  const auto z = z_matrix(p);
  const auto w = perron(z).vector;
  const auto rep = analyze(z);
  ASSERT_FALSE(rep.efficient);
  EXPECT_EQ(rep.sinks, std::vector<std::size_t>{2});
  ASSERT_TRUE(rep.certificate.has_value());
  EXPECT_TRUE(pareto_dominates(z, w, *rep.certificate));
}

TEST(Analyze, ScaledExampleIsEfficient) {
  // The two-decimal printed scaling of the worked example. Its Perron digraph
  // is strongly connected (cycles 1-4-5-1 and 1-2-3-5-2 cover it), so the
  // Perron vector is efficient; numpy and networkx agree.
  const auto bp = reference::ordering_scaled_printed();
  const auto rep = analyze(bp);
  EXPECT_TRUE(rep.efficient);
  EXPECT_EQ(rep.scc_count, 1u);
  EXPECT_TRUE(rep.hamiltonian.has_value());
  EXPECT_FALSE(rep.certificate.has_value());
  EXPECT_TRUE(analyze(bp, PositiveVector::ones(5)).efficient);
}

TEST(Analyze, ReportsPerronValueOnlyWhenUsed) {
  const auto a = reference::source_example();
  EXPECT_TRUE(analyze(a).perron_value.has_value());
  const auto rep = analyze(a, reference::source_example_vector());
  EXPECT_FALSE(rep.perron_value.has_value());
  EXPECT_FALSE(rep.efficient);
  EXPECT_EQ(rep.sources, std::vector<std::size_t>{2});
}
