#pragma once

#include "bcrank/elimination.hpp"
#include "bcrank/matrix.hpp"

#include <optional>
#include <vector>

namespace bcrank {

using BicomplexVector = std::vector<Bicomplex>;

/// Subspace of C1^n held as a reduced row-echelon basis, so two subspaces are
/// equal exactly when their bases are equal.
class ComplexSubspace {
public:
    /// Span of the given vectors. Throws DimensionMismatch on a wrong length.
    ComplexSubspace(std::size_t ambient_dim, const std::vector<ComplexVector>& spanning = {});

    static ComplexSubspace full(std::size_t ambient_dim);
    static ComplexSubspace row_space(const ComplexMatrix& m);
    static ComplexSubspace column_space(const ComplexMatrix& m);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<ComplexVector>& basis() const noexcept { return basis_; }

    friend bool operator==(const ComplexSubspace&, const ComplexSubspace&) = default;

private:
    std::size_t ambient_dim_;
    std::vector<ComplexVector> basis_;
};

enum class Idempotent { E1, E2 };

/// Span over C1 of bicomplex vectors in C2^n.
struct BicomplexSpan {
    std::size_t ambient_dim = 0;
    std::vector<BicomplexVector> generators;
};

/// Generator g flattened to (1-parts of g, 2-parts of g) in C1^(2n).
ComplexVector flatten(const BicomplexVector& v);

/// Independent-generator count, i.e. the dimension of the span over C1.
std::size_t span_dimension(const BicomplexSpan& span);

/// V*e1 or V*e2: basis vectors of V multiplied entrywise by the idempotent.
BicomplexSpan lift(const ComplexSubspace& v, Idempotent which);

/// (row space of 1_A) e1 + (row space of 2_A) e2.
BicomplexSpan idem_row_space_basis(const BicomplexMatrix& a);
/// (column space of 1_A) e1 + (column space of 2_A) e2.
BicomplexSpan idem_col_space_basis(const BicomplexMatrix& a);

/// Coefficients alpha over C1 with sum alpha_k * generator_k == v, or nullopt
/// when v is outside the span. Throws DimensionMismatch.
std::optional<ComplexVector> membership(const BicomplexVector& v, const BicomplexSpan& span);

/// Whether lift(v1, E1) and lift(v2, E2) meet only in zero, decided by the
/// independence of their concatenated generators.
bool intersection_is_trivial(const ComplexSubspace& v1, const ComplexSubspace& v2);

/// dim(lift(v1, E1) + lift(v2, E2)), computed from the combined generators.
std::size_t direct_sum_dim(const ComplexSubspace& v1, const ComplexSubspace& v2);

} // namespace bcrank
