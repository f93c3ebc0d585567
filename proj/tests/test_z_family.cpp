#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "recip/digraph.hpp"
#include "recip/perron.hpp"
#include "recip/sweep.hpp"
#include "recip/z_family.hpp"
#include "recip/z_tables.hpp"

using namespace recip;

namespace {

const std::vector<double> kFineAxis{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0};

template <class Fn>
void for_axis(std::size_t n, const std::vector<double>& axis, Fn&& fn) {
  for (double x : axis)
    for (double y : axis)
      for (double z : axis)
        for (double a : axis) fn(ZParams{n, x, y, z, a});
}

EfficiencyDigraph perron_digraph(const ZParams& p) {
  const auto z = z_matrix(p);
  return build_digraph(z, perron(z).vector);
}

}  // namespace

TEST(ZMatrix, Entries) {
  const auto z = z_matrix({6, 2.0, 3.0, 5.0, 7.0});
  EXPECT_EQ(z(0, 4), 3.0);
  EXPECT_EQ(z(0, 5), 2.0);
  EXPECT_EQ(z(1, 4), 7.0);
  EXPECT_EQ(z(1, 5), 5.0);
  EXPECT_EQ(z(5, 1), 1.0 / 5.0);
  EXPECT_EQ(z(2, 3), 1.0);
  EXPECT_EQ(z(0, 1), 1.0);
  EXPECT_THROW(z_matrix({3, 1, 1, 1, 1}), InputError);
  EXPECT_THROW(z_matrix({5, 1, 0, 1, 1}), InputError);
}

TEST(ZMatrix, SymmetryTransformsMatchImages) {
  const ZParams p{7, 0.3, 2.0, 0.7, 5.0};
  for (ZSymmetry s : kZSymmetries) {
    EXPECT_EQ(monomial_similarity(z_matrix(p), z_symmetry_transform(7, s)),
              z_matrix(z_image(p, s)))
        << to_string(s);
  }
}

TEST(ZMatrix, SymmetryPreservesEfficiency) {
  for_axis(5, default_axis(), [](const ZParams& p) {
    const bool eff = strongly_connected(perron_digraph(p)).strongly_connected;
    for (ZSymmetry s : kZSymmetries)
      EXPECT_EQ(eff, strongly_connected(perron_digraph(z_image(p, s))).strongly_connected);
  });
}

TEST(Identities, ResidualsVanish) {
  const ZParams p{7, 0.3, 2.0, 0.7, 5.0};
  const auto res = eigen_identity_residuals(p);
  EXPECT_EQ(res.rows.size(), 7u);
  EXPECT_EQ(res.derived.size(), 10u);
  EXPECT_EQ(res.derived.front().name, "row1 - row2");
  EXPECT_LE(res.max_row(), 1e-12 * res.perron_value);
  EXPECT_LE(res.max_derived(), 1e-12 * res.perron_value);
  EXPECT_LE(res.middle_collapse, 1e-13);
}

TEST(Identities, WrongEigenvalueShowsUp) {
  const ZParams p{5, 0.3, 2.0, 0.7, 5.0};
  auto pp = perron(z_matrix(p));
  pp.value += 1e-3;
  EXPECT_GT(eigen_identity_residuals(p, pp).max_row(), 1e-4);
}

TEST(Lemmas, PredictedEdgesPresentOnFineGrid) {
  for (std::size_t n : {5u, 6u}) {
    for_axis(n, kFineAxis, [](const ZParams& p) {
      const auto g = perron_digraph(p);
      for (const auto& pe : predicted_edges(p))
        EXPECT_TRUE(g.has_edge(pe.edge.first, pe.edge.second)) << pe.clause;
      EXPECT_TRUE(forbidden_reverse_edges(p, g).empty());
    });
  }
}

TEST(Lemmas, ClausesOnOnesPoint) {
  // At x = y = z = a = 1 every non-strict clause fires.
  const auto edges = predicted_edges({5, 1, 1, 1, 1});
  std::set<std::string> clauses;
  for (const auto& pe : edges) clauses.insert(pe.clause);
  EXPECT_EQ(clauses.size(), 20u);
}

TEST(Lemmas, ReverseEdgeCheckFlagsCorruptDigraph) {
  const ZParams p{5, 0.5, 0.25, 0.5, 0.25};  // max(a,z) <= 1, a != z
  EfficiencyDigraph g(5);
  g.add_edge(2, 1);
  g.add_edge(1, 2);
  const auto v = forbidden_reverse_edges(p, g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].present, (Edge{2, 1}));
}

TEST(Regions, Examples) {
  const auto v = guarantee_n5plus({5, 4, 2, 3, 1});
  EXPECT_TRUE(v.guaranteed_efficient);
  EXPECT_EQ(v.reduction_used, "(a,z,y,x)");
  EXPECT_TRUE(strongly_connected(perron_digraph({5, 4, 2, 3, 1})).strongly_connected);

  const auto t5 = guarantee_n5plus({5, 0.2, 2, 0.5, 1.5});
  EXPECT_FALSE(t5.guaranteed_efficient);
  EXPECT_EQ(t5.matched_exception, "T5(i)");
  EXPECT_EQ(t5.reduction_used, "identity");
  // Exception regions are not inefficiency regions: this point is efficient.
  EXPECT_TRUE(strongly_connected(perron_digraph({5, 0.2, 2, 0.5, 1.5})).strongly_connected);

  EXPECT_TRUE(guarantee_n5plus({5, 1, 1, 1, 1}).guaranteed_efficient);
  EXPECT_THROW(guarantee_n5plus({4, 1, 1, 1, 1}), InputError);
}

TEST(Regions, LabelsFollowTheReduction) {
  // Same T5(i) point moved by each symmetry.
  const ZParams p{5, 0.2, 2, 0.5, 1.5};
  EXPECT_EQ(guarantee_n5plus(z_image(p, ZSymmetry::swap_last)).matched_exception, "T6(i)");
  EXPECT_EQ(guarantee_n5plus(z_image(p, ZSymmetry::swap_first)).matched_exception, "T7(i)");
  EXPECT_EQ(guarantee_n5plus(z_image(p, ZSymmetry::swap_both)).matched_exception, "T8(i)");
}

TEST(Regions, SoundOnFineGrid) {
  for (std::size_t n : {5u, 6u, 7u}) {
    for_axis(n, kFineAxis, [](const ZParams& p) {
      if (guarantee_n5plus(p).guaranteed_efficient)
        EXPECT_TRUE(strongly_connected(perron_digraph(p)).strongly_connected);
    });
  }
}

TEST(Regions, LiteralHypothesesAreUnsound) {
  // Reading the self-referential hypotheses literally guarantees this
  // inefficient point; the symmetry-image reading does not.
  const ZParams p{5, 0.25, 0.75, 4, 1.5};
  EXPECT_FALSE(strongly_connected(perron_digraph(p)).strongly_connected);
  EXPECT_TRUE(guarantee_literal(p));
  EXPECT_FALSE(guarantee_n5plus(p).guaranteed_efficient);
}

TEST(Regions, ASliceExamples) {
  const auto v = guarantee_a1(5, 3, 4, 2);
  EXPECT_FALSE(v.guaranteed_efficient);
  EXPECT_EQ(v.matched_exception, "T9(i)");
  EXPECT_EQ(guarantee_a1(5, 0.25, 2, 0.5).matched_exception, "T9(iv)");
  EXPECT_TRUE(guarantee_a1(5, 1, 1, 1).guaranteed_efficient);
}

TEST(Regions, ASliceAgreesWithGeneralPredicate) {
  for (double x : kFineAxis)
    for (double y : kFineAxis)
      for (double z : kFineAxis)
        EXPECT_EQ(guarantee_a1(6, x, y, z).guaranteed_efficient,
                  guarantee_n5plus({6, x, y, z, 1.0}).guaranteed_efficient);
}

TEST(Regions, OrderFourForms) {
  EXPECT_TRUE(guarantee_n4(2, 1, 3, N4Form::six_cases));
  EXPECT_TRUE(guarantee_n4(2, 1, 3, N4Form::region_complement));
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-std::log(8.0), std::log(8.0));
  for (int k = 0; k < 5000; ++k) {
    const double x = std::exp(u(gen)), y = std::exp(u(gen)), z = std::exp(u(gen));
    EXPECT_EQ(guarantee_n4(x, y, z, N4Form::six_cases),
              guarantee_n4(x, y, z, N4Form::region_complement));
  }
}

TEST(Regions, OrderFourSoundness) {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(-std::log(8.0), std::log(8.0));
  for (int k = 0; k < 500; ++k) {
    const ZParams p{4, std::exp(u(gen)), std::exp(u(gen)), std::exp(u(gen)), 1.0};
    if (guarantee_n4(p.x, p.y, p.z, N4Form::six_cases))
      EXPECT_TRUE(strongly_connected(perron_digraph(p)).strongly_connected);
  }
}

TEST(Sink, OrderFiveCharacterization) {
  for_axis(5, kFineAxis, [](const ZParams& p) {
    const auto s = sink_characterization(p);
    EXPECT_TRUE(s.agrees);
    EXPECT_TRUE(s.block_agrees);
  });
}

TEST(Sink, MiddleBlockSinkAtOrderSix) {
  // Inefficient, yet every single vertex has an out-edge: the middle block
  // {3, 4} is the terminal component.
  const auto s = sink_characterization({6, 0.25, 2, 2, 0.25});
  EXPECT_FALSE(s.efficient);
  EXPECT_FALSE(s.sink_present);
  EXPECT_FALSE(s.agrees);
  EXPECT_TRUE(s.block_sink_present);
  EXPECT_TRUE(s.block_agrees);
}

TEST(Sink, BlockVariantOnFineGrid) {
  for (std::size_t n : {6u, 7u})
    for_axis(n, kFineAxis, [](const ZParams& p) { EXPECT_TRUE(sink_characterization(p).block_agrees); });
}

TEST(Tables, RelationChains) {
  const ZParams p{5, 0.5, 3, 2, 2.5};
  EXPECT_TRUE(relation_holds("x<=1<=y,z", p));
  EXPECT_TRUE(relation_holds("x<1<z<a<y", p));
  EXPECT_FALSE(relation_holds("x<1<y<a<z", p));
  EXPECT_TRUE(relation_holds("z,a<=y", p));
  EXPECT_FALSE(relation_holds("z,y<a", p));
  EXPECT_TRUE(relation_holds("x,z,a,y", p));
  EXPECT_THROW(relation_holds("x<w", p), InputError);
  EXPECT_THROW(relation_holds("x<3", p), InputError);
}

TEST(Tables, RowCountAndVertices) {
  EXPECT_EQ(z_table_rows().size(), 41u);
  EXPECT_EQ(table_walk("1,n,n-1,3", 7), (std::vector<std::size_t>{0, 6, 5, 2}));
  EXPECT_THROW(table_vertex("4", 7), InputError);
}

TEST(Tables, OracleLookup) {
  const auto* row = table_oracle({5, 0.5, 2, 3, 1.5});
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->kind, TableKind::hamiltonian_cycle);
  EXPECT_EQ(row->index, 1);

  const auto* sink_row = table_oracle({5, 0.25, 1.0, 0.5, 0.75});
  ASSERT_NE(sink_row, nullptr);
  EXPECT_EQ(sink_row->kind, TableKind::sink_cycle_extra_edge);
  EXPECT_EQ(sink_row->index, 2);
  EXPECT_EQ(sink_row->special_vertex, "2");

  EXPECT_EQ(table_oracle({5, 1, 1, 1, 1})->kind, TableKind::hamiltonian_cycle);
}

TEST(Tables, ClaimedEdgesHoldOnFineGrid) {
  std::set<const TableRow*> hit;
  for (std::size_t n : {5u, 6u, 7u}) {
    for_axis(n, kFineAxis, [&](const ZParams& p) {
      const auto z = z_matrix(p);
      const auto g = build_digraph(z, perron(z).vector);
      const bool efficient = strongly_connected(g).strongly_connected;
      const auto s = sinks(g);
      for (const TableRow* row : table_rows_matching(p)) {
        hit.insert(row);
        EXPECT_TRUE(check_table_row(*row, g).empty())
            << to_string(row->kind) << " row " << row->index;
        if (predicts_efficiency(row->kind)) EXPECT_TRUE(efficient);
        if (n == 5 && !efficient && !predicts_efficiency(row->kind)) {
          ASSERT_EQ(s.size(), 1u);
          EXPECT_EQ(s[0], table_vertex(row->special_vertex, n));
        }
      }
    });
  }
  EXPECT_EQ(hit.size(), z_table_rows().size());
}
