#include "bcrank/matrix.hpp"

#include "bcrank/elimination.hpp"

#include <sstream>

namespace bcrank {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    for (std::size_t k = 1; k < indices_.size(); ++k)
        if (indices_[k] <= indices_[k - 1])
            throw IndexOutOfRange("index set must be strictly increasing");
}

IndexSet IndexSet::all(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = k;
    return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; mask != 0; ++k, mask >>= 1)
        if (mask & 1u)
            v.push_back(k);
    return IndexSet(std::move(v));
}

std::uint64_t IndexSet::mask() const {
    std::uint64_t m = 0;
    for (std::size_t k : indices_) {
        if (k >= 64)
            throw IndexOutOfRange("index too large for a 64-bit mask");
        m |= std::uint64_t{1} << k;
    }
    return m;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    std::size_t j = 0;
    for (std::size_t k : indices_) {
        while (j < other.size() && other[j] < k)
            ++j;
        if (j == other.size() || other[j] != k)
            return false;
    }
    return true;
}

std::string to_string(const IndexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

const char* to_string(MatrixClass c) noexcept {
    switch (c) {
    case MatrixClass::E1Matrix: return "E1Matrix";
    case MatrixClass::E2Matrix: return "E2Matrix";
    case MatrixClass::E1E2Matrix: return "E1E2Matrix";
    case MatrixClass::General: return "General";
    }
    return "?";
}

std::pair<ComplexMatrix, ComplexMatrix> idempotent_split(const BicomplexMatrix& a) {
    ComplexMatrix first(a.rows(), a.cols());
    ComplexMatrix second(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            first(i, j) = a(i, j).first_part();
            second(i, j) = a(i, j).second_part();
        }
    }
    return {std::move(first), std::move(second)};
}

BicomplexMatrix from_components(const ComplexMatrix& first, const ComplexMatrix& second) {
    if (first.rows() != second.rows() || first.cols() != second.cols())
        throw ShapeMismatch("component matrices differ in shape");
    BicomplexMatrix out(first.rows(), first.cols());
    for (std::size_t i = 0; i < first.rows(); ++i)
        for (std::size_t j = 0; j < first.cols(); ++j)
            out(i, j) = Bicomplex::from_idempotent(first(i, j), second(i, j));
    return out;
}

BicomplexMatrix embed(const ComplexMatrix& m) {
    BicomplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Bicomplex(m(i, j));
    return out;
}

Bicomplex det_idempotent(const BicomplexMatrix& a) {
    if (!a.is_square())
        throw NotSquare("determinant of a non-square matrix");
    const auto [first, second] = idempotent_split(a);
    return Bicomplex::from_idempotent(determinant(first), determinant(second));
}

namespace {

Bicomplex laplace(const BicomplexMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1)
        return a(0, 0);
    Bicomplex total;
    std::vector<std::size_t> rest(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        rest[i - 1] = i;
    const IndexSet lower(rest);
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero())
            continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j)
                cols.push_back(c);
        Bicomplex term = a(0, j) * laplace(submatrix(a, lower, IndexSet(cols)));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace

Bicomplex det_laplace(const BicomplexMatrix& a) {
    if (!a.is_square())
        throw NotSquare("determinant of a non-square matrix");
    if (a.rows() > kLaplaceMaxOrder)
        throw OrderTooLarge("cofactor expansion limited to order " +
                            std::to_string(kLaplaceMaxOrder));
    return laplace(a);
}

bool is_singular_matrix(const BicomplexMatrix& a) {
    if (!a.is_square())
        throw NotSquare("singularity of a non-square matrix");
    const auto [first, second] = idempotent_split(a);
    return !is_nonsingular(first) || !is_nonsingular(second);
}

MatrixClass classify(const BicomplexMatrix& a) {
    bool all_first_zero = true;  // every entry in I2
    bool all_second_zero = true; // every entry in I1
    for (const Bicomplex& x : a.data()) {
        const SingularityClass c = x.singularity_class();
        if (c == SingularityClass::Invertible)
            return MatrixClass::General;
        if (c == SingularityClass::E1Line)
            all_first_zero = false;
        if (c == SingularityClass::E2Line)
            all_second_zero = false;
    }
    // The zero matrix satisfies both; report the symmetric label.
    if (all_first_zero && all_second_zero)
        return MatrixClass::E1E2Matrix;
    if (all_second_zero)
        return MatrixClass::E1Matrix;
    if (all_first_zero)
        return MatrixClass::E2Matrix;
    return MatrixClass::E1E2Matrix;
}

namespace {

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("matrix sum of different shapes");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) += b(i, j);
    return out;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("matrix product of non-conformable shapes");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

} // namespace

BicomplexMatrix operator+(const BicomplexMatrix& a, const BicomplexMatrix& b) { return add(a, b); }
BicomplexMatrix operator*(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    return multiply(a, b);
}

BicomplexMatrix operator*(const Bicomplex& scalar, const BicomplexMatrix& a) {
    BicomplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = scalar * a(i, j);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows())
        throw ShapeMismatch("hstack of matrices with different row counts");
    ComplexMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols())
        throw ShapeMismatch("vstack of matrices with different column counts");
    ComplexMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

} // namespace bcrank
