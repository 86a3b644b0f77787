#pragma once

#include "bcrank/elimination.hpp"
#include "bcrank/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bcrank {

/// One link B_k of a chain: a k x k submatrix given by its row and column sets.
struct ChainLevel {
    IndexSet rows;
    IndexSet cols;

    friend bool operator==(const ChainLevel&, const ChainLevel&) = default;
};

/// Nested non-singular submatrices B_1 < B_2 < ... < B_r; levels[k-1] has order k.
struct ChainCertificate {
    std::vector<ChainLevel> levels;

    std::size_t length() const noexcept { return levels.size(); }
    friend bool operator==(const ChainCertificate&, const ChainCertificate&) = default;
};

struct ChainRankResult {
    std::size_t rank = 0;
    /// Absent exactly when rank == 0.
    std::optional<ChainCertificate> certificate;
};

inline constexpr std::size_t kDefaultMaxDim = 10;
/// Hard ceiling imposed by the 64-bit row/column masks.
inline constexpr std::size_t kMaskWidth = 64;

struct ChainRankOptions {
    /// max(rows, cols) above this raises GuardExceeded.
    std::size_t max_dim = kDefaultMaxDim;
    /// OpenMP threads for the level kernel; 0 leaves the runtime default.
    int threads = 0;
};

/// Largest r admitting a nested series of non-singular submatrices of every
/// order 1..r. Level-wise bottom-up search: level 1 holds the invertible
/// entries, level k+1 holds the non-singular one-row-one-column extensions of
/// level-k pairs. Non-singularity of each candidate is evaluated in parallel.
/// The certificate picks the lexicographically smallest pair at the top level
/// and then the smallest chainable sub-pair at each level below.
ChainRankResult chain_rank(const BicomplexMatrix& a, const ChainRankOptions& options = {});

/// Single-threaded twin of chain_rank; must return an identical result.
ChainRankResult chain_rank_serial(const BicomplexMatrix& a, const ChainRankOptions& options = {});

/// dim over C1 of the row span in C2^m, via the n x 2m flattening [1_A | 2_A].
std::size_t row_rank(const BicomplexMatrix& a);
/// dim over C1 of the column span in C2^n, via 1_A stacked over 2_A.
std::size_t col_rank(const BicomplexMatrix& a);
/// rank(1_A) + rank(2_A) from the component row spaces.
std::size_t idem_row_rank(const BicomplexMatrix& a);
/// rank(1_A) + rank(2_A) from the component column spaces.
std::size_t idem_col_rank(const BicomplexMatrix& a);

struct RankReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t chain_rank = 0;
    std::size_t row_rank = 0;
    std::size_t col_rank = 0;
    std::size_t idem_row_rank = 0;
    std::size_t idem_col_rank = 0;
    std::size_t rank_1A = 0;
    std::size_t rank_2A = 0;
    std::optional<Bicomplex> det;     // square only
    std::optional<bool> det_singular; // square only
    MatrixClass matrix_class = MatrixClass::General;
    std::optional<ChainCertificate> certificate;
};

/// Throws GuardExceeded per options.max_dim.
RankReport rank_report(const BicomplexMatrix& a, const ChainRankOptions& options = {});

} // namespace bcrank
