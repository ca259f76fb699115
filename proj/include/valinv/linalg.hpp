#pragma once

#include "valinv/rational.hpp"

#include <optional>
#include <vector>

namespace valinv {

using RMatrix = std::vector<RVector>;  // row-major

struct RowEchelon {
    RMatrix rows;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Gauss-Jordan elimination; pivot = first nonzero entry in column order.
RowEchelon rref(RMatrix m);
std::size_t rank(const RMatrix& m);

/// Exact determinant of a square matrix.
Rational determinant(RMatrix m);

/// Solves A x = b; nullopt if inconsistent. Free variables are set to zero,
/// so the answer is unique when A has full column rank.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

/// Basis of {x : A x = 0}.
RMatrix nullspace(const RMatrix& a, std::size_t cols);

bool in_row_span(const RVector& v, const RMatrix& rows);

/// Dimension of the affine hull of a point set (−1 for the empty set).
int affine_dimension(const std::vector<RVector>& points);

}  // namespace valinv
