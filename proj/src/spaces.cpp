#include "bcrank/spaces.hpp"

namespace bcrank {

namespace {

ComplexMatrix rows_to_matrix(std::size_t cols, const std::vector<ComplexVector>& rows) {
    ComplexMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("vector length " + std::to_string(rows[i].size()) +
                                    " in ambient dimension " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<ComplexVector> matrix_rows(const ComplexMatrix& m) {
    std::vector<ComplexVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

// Generators as the columns of a 2n x k matrix.
ComplexMatrix flattened_columns(const BicomplexSpan& span) {
    ComplexMatrix g(2 * span.ambient_dim, span.generators.size());
    for (std::size_t k = 0; k < span.generators.size(); ++k) {
        const ComplexVector f = flatten(span.generators[k]);
        for (std::size_t i = 0; i < f.size(); ++i)
            g(i, k) = f[i];
    }
    return g;
}

BicomplexSpan combine(BicomplexSpan a, const BicomplexSpan& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw DimensionMismatch("spans live in different ambient dimensions");
    a.generators.insert(a.generators.end(), b.generators.begin(), b.generators.end());
    return a;
}

void check_same_ambient(const ComplexSubspace& v1, const ComplexSubspace& v2) {
    if (v1.ambient_dim() != v2.ambient_dim())
        throw DimensionMismatch("subspaces live in different ambient dimensions");
}

} // namespace

ComplexSubspace::ComplexSubspace(std::size_t ambient_dim, const std::vector<ComplexVector>& spanning)
    : ambient_dim_(ambient_dim) {
    const Echelon e = reduced_row_echelon(rows_to_matrix(ambient_dim, spanning));
    for (std::size_t r = 0; r < e.rank(); ++r) {
        const auto row = e.reduced.row(r);
        basis_.emplace_back(row.begin(), row.end());
    }
}

ComplexSubspace ComplexSubspace::full(std::size_t ambient_dim) {
    return row_space(ComplexMatrix::identity(ambient_dim));
}

ComplexSubspace ComplexSubspace::row_space(const ComplexMatrix& m) {
    return ComplexSubspace(m.cols(), matrix_rows(m));
}

ComplexSubspace ComplexSubspace::column_space(const ComplexMatrix& m) {
    return row_space(m.transposed());
}

ComplexVector flatten(const BicomplexVector& v) {
    ComplexVector out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].first_part();
        out[v.size() + i] = v[i].second_part();
    }
    return out;
}

std::size_t span_dimension(const BicomplexSpan& span) {
    return complex_rank(flattened_columns(span));
}

BicomplexSpan lift(const ComplexSubspace& v, Idempotent which) {
    const Bicomplex unit = which == Idempotent::E1 ? Bicomplex::e1() : Bicomplex::e2();
    BicomplexSpan out;
    out.ambient_dim = v.ambient_dim();
    for (const ComplexVector& b : v.basis()) {
        BicomplexVector g;
        g.reserve(b.size());
        for (const GaussianRational& x : b)
            g.push_back(Bicomplex(x) * unit);
        out.generators.push_back(std::move(g));
    }
    return out;
}

BicomplexSpan idem_row_space_basis(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return combine(lift(ComplexSubspace::row_space(first), Idempotent::E1),
                   lift(ComplexSubspace::row_space(second), Idempotent::E2));
}

BicomplexSpan idem_col_space_basis(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return combine(lift(ComplexSubspace::column_space(first), Idempotent::E1),
                   lift(ComplexSubspace::column_space(second), Idempotent::E2));
}

std::optional<ComplexVector> membership(const BicomplexVector& v, const BicomplexSpan& span) {
    if (v.size() != span.ambient_dim)
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                " against span in dimension " + std::to_string(span.ambient_dim));
    return solve(flattened_columns(span), flatten(v));
}

bool intersection_is_trivial(const ComplexSubspace& v1, const ComplexSubspace& v2) {
    check_same_ambient(v1, v2);
    const BicomplexSpan both = combine(lift(v1, Idempotent::E1), lift(v2, Idempotent::E2));
    return span_dimension(both) == both.generators.size();
}

std::size_t direct_sum_dim(const ComplexSubspace& v1, const ComplexSubspace& v2) {
    check_same_ambient(v1, v2);
    return span_dimension(combine(lift(v1, Idempotent::E1), lift(v2, Idempotent::E2)));
}

} // namespace bcrank
