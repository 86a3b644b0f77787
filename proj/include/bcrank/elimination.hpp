#pragma once

#include "bcrank/matrix.hpp"

#include <optional>
#include <vector>

namespace bcrank {

using ComplexVector = std::vector<GaussianRational>;

/// Determinant by Bareiss fraction-free elimination. Every intermediate entry
/// is a minor of the input, so the divisions are exact and growth stays
/// polynomial. Throws NotSquare.
GaussianRational determinant(const ComplexMatrix& m);

/// Same as determinant(m) != 0, without finishing the elimination.
bool is_nonsingular(const ComplexMatrix& m);

/// Rank over C1.
std::size_t complex_rank(const ComplexMatrix& m);

/// Reduced row-echelon form with the pivot column of each nonzero row.
struct Echelon {
    ComplexMatrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon reduced_row_echelon(ComplexMatrix m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws DimensionMismatch if b.size() != a.rows().
std::optional<ComplexVector> solve(const ComplexMatrix& a, const ComplexVector& b);

} // namespace bcrank
