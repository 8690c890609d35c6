#pragma once

#include <vector>

#include "polyroots/numerics.hpp"

namespace polyroots {

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Determinant by LU with partial pivoting. The matrix is taken by value.
Complex determinant(ComplexMatrix a);

/// Solves a x = b by LU with partial pivoting. Returns false when a pivot
/// vanishes exactly (singular matrix).
bool lu_solve(ComplexMatrix a, std::vector<Complex> b, std::vector<Complex>& x);

}  // namespace polyroots
