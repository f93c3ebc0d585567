#include <gtest/gtest.h>

#include <cmath>

#include "recip/matrix.hpp"
#include "recip/perron.hpp"
#include "recip/reference.hpp"

using namespace recip;

TEST(Perron, OnesMatrix) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto pp = perron(ReciprocalMatrix::ones(n));
    EXPECT_NEAR(pp.value, static_cast<double>(n), 1e-13);
    for (double w : pp.vector) EXPECT_DOUBLE_EQ(w, 1.0);
  }
}

TEST(Perron, OrderOneRejected) { EXPECT_THROW(ReciprocalMatrix::ones(1), InputError); }

TEST(Perron, ConsistentMatrixRecoversGenerator) {
  const PositiveVector v{1.0, 3.0, 0.5, 2.0};
  const auto pp = perron(consistent_from_vector(v));
  EXPECT_NEAR(pp.value, 4.0, 1e-12);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(pp.vector[i], v[i], 1e-12);
}

TEST(Perron, PrintedExampleVector) {
  const auto pp = perron(reference::ordering_base());
  const auto printed = reference::ordering_base_perron();
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(pp.vector[i], printed[i], 5e-4);
  // Independent oracle value (numpy eig on the symmetrized matrix).
  EXPECT_NEAR(pp.value, 5.2584, 1e-4);
}

TEST(Perron, ValueAtLeastOrderAndSmallResidual) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto a = random_reciprocal(n, seed, std::log(9.0));
    const auto pp = perron(a);
    EXPECT_GE(pp.value, static_cast<double>(n) - 1e-12);
    EXPECT_EQ(pp.vector[0], 1.0);
    const auto aw = a.multiply(pp.vector.values());
    double maxw = 0.0;
    for (double w : pp.vector) maxw = std::max(maxw, w);
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_NEAR(aw[i], pp.value * pp.vector[i], 1e-10 * pp.value * maxw);
  }
}

TEST(Perron, IterationCapRaises) {
  const auto a = random_reciprocal(6, 11, std::log(9.0));
  EXPECT_THROW(perron(a, {1e-14, 1}), ConvergenceError);
}
