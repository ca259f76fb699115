#pragma once

#include "valinv/filtration.hpp"
#include "valinv/geodesic.hpp"

#include <random>

namespace valinv {

/// Seeded generators for the verification suites. All draws go through
/// std::mt19937_64 so a seed reproduces the same objects.
long uniform_int(std::mt19937_64& rng, long lo, long hi);

/// Entries in {-3..3}, redrawn until nonsingular.
RMatrix random_invertible(std::size_t d, std::mt19937_64& rng);

/// d jumps in [0, 3m] with denominators up to 4 (integers only when asked),
/// realized by the suffixes of a random invertible matrix.
FlagFiltration random_flag_filtration(std::size_t d, unsigned m, std::mt19937_64& rng, bool integral = false);

/// 1 to 5 pieces with sorted non-positive half-integer slopes and rational widths.
TestCurve1D random_test_curve(std::mt19937_64& rng);

}  // namespace valinv
