#include "bcrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>
#include <stdexcept>

namespace bcrank::oracle {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold)
            return x % bound;
    }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

double SplitMix64::unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

void GenParams::validate() const {
    if (coeff_bound < 1)
        throw std::invalid_argument("coeff_bound must be >= 1");
    if (!(singular_density >= 0.0 && singular_density <= 1.0))
        throw std::invalid_argument("singular_density must lie in [0, 1]");
}

namespace {

GaussianRational gaussian_integer(std::int64_t bound, bool nonzero, SplitMix64& rng) {
    for (;;) {
        const std::int64_t re = rng.between(-bound, bound);
        const std::int64_t im = rng.between(-bound, bound);
        if (!nonzero || re != 0 || im != 0)
            return {Rational(static_cast<long>(re)), Rational(static_cast<long>(im))};
    }
}

} // namespace

Bicomplex random_bicomplex(const GenParams& p, SplitMix64& rng) {
    p.validate();
    if (rng.unit() < p.singular_density) {
        const bool keep_first = (rng.next() & 1u) != 0;
        GaussianRational other = gaussian_integer(p.coeff_bound, false, rng);
        return keep_first ? Bicomplex::from_idempotent(other, {})
                          : Bicomplex::from_idempotent({}, other);
    }
    GaussianRational c1 = gaussian_integer(p.coeff_bound, true, rng);
    GaussianRational c2 = gaussian_integer(p.coeff_bound, true, rng);
    return Bicomplex::from_idempotent(c1, c2);
}

BicomplexMatrix random_matrix(std::size_t rows, std::size_t cols, const GenParams& p,
                              SplitMix64& rng) {
    BicomplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = random_bicomplex(p, rng);
    return a;
}

BicomplexMatrix random_matrix(std::size_t rows, std::size_t cols, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return random_matrix(rows, cols, p, rng);
}

InvertibleDraw random_invertible_entry_matrix(std::size_t n, const GenParams& p,
                                              std::size_t limit) {
    GenParams dense = p;
    dense.singular_density = 0.0;
    SplitMix64 rng(p.seed);
    InvertibleDraw draw;
    for (;;) {
        BicomplexMatrix a = random_matrix(n, n, dense, rng);
        if (!is_singular_matrix(a)) {
            draw.matrix = std::move(a);
            return draw;
        }
        if (++draw.rejections > limit)
            throw RejectionLimitExceeded("no non-singular matrix after " +
                                         std::to_string(limit) + " draws");
    }
}

ComplexSubspace random_subspace(std::size_t ambient_dim, const GenParams& p, SplitMix64& rng) {
    p.validate();
    const std::size_t count = rng.below(ambient_dim + 1);
    std::vector<ComplexVector> vectors;
    for (std::size_t k = 0; k < count; ++k) {
        if (!vectors.empty() && rng.below(4) == 0) {
            vectors.push_back(vectors[rng.below(vectors.size())]);
            continue;
        }
        ComplexVector v(ambient_dim);
        for (auto& x : v)
            x = gaussian_integer(p.coeff_bound, false, rng);
        vectors.push_back(std::move(v));
    }
    return ComplexSubspace(ambient_dim, vectors);
}

namespace {

Bicomplex permutation_det(const BicomplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Bicomplex total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Bicomplex term(1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            term *= a(i, perm[i]);
        if (inversions % 2 == 0)
            total += term;
        else
            total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::size_t> bits(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; mask != 0; ++k, mask >>= 1)
        if (mask & 1u)
            out.push_back(k);
    return out;
}

BicomplexMatrix select(const BicomplexMatrix& a, std::uint32_t rows, std::uint32_t cols) {
    const auto r = bits(rows);
    const auto c = bits(cols);
    BicomplexMatrix out(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            out(i, j) = a(r[i], c[j]);
    return out;
}

// Whether the |rows| x |cols| block heads a full series B_1 < ... < B_k.
bool chainable(const BicomplexMatrix& a, std::uint32_t rows, std::uint32_t cols) {
    if (!permutation_det(select(a, rows, cols)).is_invertible())
        return false;
    if (std::popcount(rows) == 1)
        return true;
    for (std::size_t r : bits(rows))
        for (std::size_t c : bits(cols))
            if (chainable(a, rows & ~(1u << r), cols & ~(1u << c)))
                return true;
    return false;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::uint32_t>& out) {
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == k)
            out.push_back(m);
}

// Naive Gaussian elimination: does b lie in the column span of `columns`?
bool in_span(const std::vector<ComplexVector>& columns, const ComplexVector& b) {
    const std::size_t rows = b.size();
    const std::size_t cols = columns.size();
    std::vector<ComplexVector> m(rows, ComplexVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = columns[j][i];
        m[i][cols] = b[i];
    }
    std::size_t lead = 0;
    for (std::size_t j = 0; j < cols && lead < rows; ++j) {
        std::size_t p = lead;
        while (p < rows && m[p][j].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[lead]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || m[i][j].is_zero())
                continue;
            const GaussianRational f = m[i][j] / m[lead][j];
            for (std::size_t k = j; k <= cols; ++k)
                m[i][k] -= f * m[lead][k];
        }
        ++lead;
    }
    for (std::size_t i = lead; i < rows; ++i)
        if (!m[i][cols].is_zero())
            return false;
    return true;
}

ComplexVector z_coordinates(std::span<const Bicomplex> row) {
    ComplexVector out;
    out.reserve(2 * row.size());
    for (const Bicomplex& x : row)
        out.push_back(x.z1());
    for (const Bicomplex& x : row)
        out.push_back(x.z2());
    return out;
}

} // namespace

std::size_t chain_rank_reference(const BicomplexMatrix& a) {
    if (std::max(a.rows(), a.cols()) > kChainReferenceMaxDim)
        throw GuardExceeded("reference chain rank limited to " +
                            std::to_string(kChainReferenceMaxDim) + " rows/columns");
    for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
        std::vector<std::uint32_t> row_sets, col_sets;
        subsets_of_size(a.rows(), k, row_sets);
        subsets_of_size(a.cols(), k, col_sets);
        for (std::uint32_t r : row_sets)
            for (std::uint32_t c : col_sets)
                if (chainable(a, r, c))
                    return k;
    }
    return 0;
}

std::size_t row_rank_reference(const BicomplexMatrix& a) {
    std::vector<ComplexVector> kept;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        ComplexVector v = z_coordinates(a.row(i));
        if (!in_span(kept, v))
            kept.push_back(std::move(v));
    }
    return kept.size();
}

Bicomplex det_reference(const BicomplexMatrix& a) {
    if (!a.is_square())
        throw NotSquare("determinant of a non-square matrix");
    if (a.rows() > kDetReferenceMaxOrder)
        throw OrderTooLarge("reference determinant limited to order " +
                            std::to_string(kDetReferenceMaxOrder));
    return permutation_det(a);
}

bool validate_certificate(const BicomplexMatrix& a, const ChainCertificate& certificate) {
    const auto& levels = certificate.levels;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const ChainLevel& level = levels[k];
        if (level.rows.size() != k + 1 || level.cols.size() != k + 1)
            return false;
        if (level.rows[k] >= a.rows() || level.cols[k] >= a.cols())
            return false;
        if (k > 0 && (!levels[k - 1].rows.is_subset_of(level.rows) ||
                      !levels[k - 1].cols.is_subset_of(level.cols)))
            return false;
        const BicomplexMatrix block = submatrix(a, level.rows, level.cols);
        // Permutation sums get expensive past order 6.
        const Bicomplex det = block.rows() <= 6 ? permutation_det(block) : det_idempotent(block);
        if (!det.is_invertible())
            return false;
    }
    return true;
}

} // namespace bcrank::oracle
