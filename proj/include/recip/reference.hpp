#pragma once

#include <vector>

#include "recip/matrix.hpp"

// Published reference instances, entries exactly as printed (four decimals
// where the source rounds).
namespace recip::reference {

/// 5x5 matrix whose extension changes the Perron ordering. The printed
/// lower triangle is the rounded reciprocal of the upper one.
inline std::vector<std::vector<double>> ordering_base_rows() {
  return {{1, 1, 1, 0.9933, 2.5},
          {1, 1, 1, 0.6666, 1},
          {1, 1, 1, 0.6666, 0.5},
          {1.0067, 1.5, 1.5, 1, 0.75},
          {0.4, 1, 2, 1.3333, 1}};
}

inline ReciprocalMatrix ordering_base() {
  return make_reciprocal(ordering_base_rows(), ReciprocityMode::symmetrize);
}

/// Printed Perron vector of ordering_base(), four decimals.
inline std::vector<double> ordering_base_perron() {
  return {1, 0.7110, 0.6325, 0.8555, 0.8258};
}

/// Diagonal of the scaling D.
inline PositiveVector ordering_scaling() { return {0.5, 0.5, 0.5, 1.0 / 3.0, 0.25}; }

/// D B D^{-1} as printed (entries rounded to two decimals).
inline ReciprocalMatrix ordering_scaled_printed() {
  return ReciprocalMatrix::from_upper(5, [](std::size_t i, std::size_t j) {
    if (i == 0 && j == 3) return 1.49;
    if (i == 0 && j == 4) return 5.0;
    if (i == 1 && j == 4) return 2.0;
    return 1.0;
  });
}

/// Perron vector of the conjugated extension, [1, 1, 1, 3/2, 2, 1/2].
inline std::vector<double> ordering_extension_perron() { return {1, 1, 1, 1.5, 2, 0.5}; }

/// 3x3 matrix with w = [1, 2, 3] whose digraph has vertex 3 as a source.
inline ReciprocalMatrix source_example() {
  return make_reciprocal({{1, 1, 2}, {1, 1, 1}, {0.5, 1, 1}}, ReciprocityMode::validate);
}

inline PositiveVector source_example_vector() { return {1, 2, 3}; }

}  // namespace recip::reference
