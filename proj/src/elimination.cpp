#include "bcrank/elimination.hpp"

#include <utility>

namespace bcrank {

namespace {

void swap_rows(ComplexMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

// Runs Bareiss in place. Returns false as soon as a zero pivot column is met
// (the determinant is then zero); on success the determinant is m(n-1, n-1)
// times sign.
bool bareiss(ComplexMatrix& m, int& sign) {
    const std::size_t n = m.rows();
    GaussianRational previous(1);
    sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero())
            ++pivot;
        if (pivot == n)
            return false;
        if (pivot != k) {
            swap_rows(m, pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                GaussianRational v = m(i, j) * m(k, k);
                v -= m(i, k) * m(k, j);
                v /= previous;
                m(i, j) = std::move(v);
            }
            m(i, k) = GaussianRational();
        }
        previous = m(k, k);
    }
    return true;
}

} // namespace

GaussianRational determinant(const ComplexMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant of a non-square matrix");
    if (m.rows() == 0)
        return GaussianRational(1);
    ComplexMatrix work = m;
    int sign = 1;
    if (!bareiss(work, sign))
        return GaussianRational();
    GaussianRational d = work(m.rows() - 1, m.rows() - 1);
    return sign < 0 ? -d : d;
}

bool is_nonsingular(const ComplexMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant of a non-square matrix");
    if (m.rows() == 0)
        return true;
    ComplexMatrix work = m;
    int sign = 1;
    return bareiss(work, sign) && !work(m.rows() - 1, m.rows() - 1).is_zero();
}

Echelon reduced_row_echelon(ComplexMatrix m) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        swap_rows(m, pivot, row);
        const GaussianRational inv = GaussianRational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            const GaussianRational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t complex_rank(const ComplexMatrix& m) {
    // Forward elimination only; no need for the reduced form.
    ComplexMatrix work = m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < work.rows() && work(pivot, col).is_zero())
            ++pivot;
        if (pivot == work.rows())
            continue;
        swap_rows(work, pivot, row);
        for (std::size_t i = row + 1; i < work.rows(); ++i) {
            if (work(i, col).is_zero())
                continue;
            const GaussianRational factor = work(i, col) / work(row, col);
            for (std::size_t j = col; j < work.cols(); ++j)
                work(i, j) -= factor * work(row, j);
        }
        ++row;
    }
    return row;
}

std::optional<ComplexVector> solve(const ComplexMatrix& a, const ComplexVector& b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length does not match row count");
    ComplexMatrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            augmented(i, j) = a(i, j);
        augmented(i, a.cols()) = b[i];
    }
    const Echelon e = reduced_row_echelon(std::move(augmented));
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    ComplexVector x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

} // namespace bcrank
