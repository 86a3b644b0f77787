#pragma once

#include "bcrank/bicomplex.hpp"
#include "bcrank/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace bcrank {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        check_shape();
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeMismatch("entry count does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
        check_shape();
    }

    /// Row-wise literal; every row must have the same length.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw ShapeMismatch("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
        check_shape();
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_shape() const {
        // Bicomplex matrices are never empty; complex work matrices may be.
        if constexpr (std::is_same_v<T, Bicomplex>) {
            if (rows_ == 0 || cols_ == 0)
                throw ShapeMismatch("bicomplex matrix must have at least one row and column");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = Matrix<GaussianRational>;
using BicomplexMatrix = Matrix<Bicomplex>;

/// Strictly increasing list of 0-based indices selecting rows or columns.
class IndexSet {
public:
    IndexSet() = default;
    /// Throws IndexOutOfRange unless strictly increasing.
    IndexSet(std::vector<std::size_t> indices);
    IndexSet(std::initializer_list<std::size_t> indices)
        : IndexSet(std::vector<std::size_t>(indices)) {}

    /// {0, 1, ..., n-1}
    static IndexSet all(std::size_t n);
    /// Indices of the set bits of mask, ascending.
    static IndexSet from_mask(std::uint64_t mask);

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    std::size_t operator[](std::size_t k) const { return indices_[k]; }
    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

    /// Requires every index < 64.
    std::uint64_t mask() const;
    bool is_subset_of(const IndexSet& other) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> indices_;
};

std::string to_string(const IndexSet& s);

/// e1-/e2-/e1e2-matrix classification, most specific label first.
enum class MatrixClass { E1Matrix, E2Matrix, E1E2Matrix, General };

const char* to_string(MatrixClass c) noexcept;

/// Selects rows R and columns C. Throws IndexOutOfRange on empty or out-of-bounds sets.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.empty() || cols.empty())
        throw IndexOutOfRange("submatrix index sets must be nonempty");
    if (rows[rows.size() - 1] >= a.rows() || cols[cols.size() - 1] >= a.cols())
        throw IndexOutOfRange("submatrix index out of range");
    Matrix<T> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = a(rows[i], cols[j]);
    return out;
}

/// (1_A, 2_A): entrywise idempotent parts.
std::pair<ComplexMatrix, ComplexMatrix> idempotent_split(const BicomplexMatrix& a);
/// M1*e1 + M2*e2. Throws ShapeMismatch when shapes differ.
BicomplexMatrix from_components(const ComplexMatrix& first, const ComplexMatrix& second);
/// Embeds a complex matrix (z2 = 0).
BicomplexMatrix embed(const ComplexMatrix& m);

/// det(1_A) e1 + det(2_A) e2, with component determinants from fraction-free elimination.
Bicomplex det_idempotent(const BicomplexMatrix& a);

inline constexpr std::size_t kLaplaceMaxOrder = 6;
/// Cofactor expansion in bicomplex arithmetic. Throws OrderTooLarge above order 6.
Bicomplex det_laplace(const BicomplexMatrix& a);

/// det(A) in O2, i.e. det(1_A) = 0 or det(2_A) = 0. Throws NotSquare.
bool is_singular_matrix(const BicomplexMatrix& a);

MatrixClass classify(const BicomplexMatrix& a);

BicomplexMatrix operator+(const BicomplexMatrix& a, const BicomplexMatrix& b);
BicomplexMatrix operator*(const BicomplexMatrix& a, const BicomplexMatrix& b);
BicomplexMatrix operator*(const Bicomplex& scalar, const BicomplexMatrix& a);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// [a | b]
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);
/// a stacked over b
ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace bcrank
