#pragma once

#include "bcrank/matrix.hpp"
#include "bcrank/rank.hpp"
#include "bcrank/spaces.hpp"

#include <cstdint>

// Brute-force reference implementations and seeded instance generators.
// Nothing here shares code with the engine's elimination or chain search.
namespace bcrank::oracle {

/// SplitMix64: state advances by the golden-ratio gamma 0x9E3779B97F4A7C15
/// and each output is the standard 64-bit finalizer of the new state. The
/// stream is a pure function of the seed and the draw count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Uniform in [0, bound) by rejection; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;
    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() noexcept;

private:
    std::uint64_t state_;
};

/// The SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Independent sub-seed for work item `index` of a run seeded with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

struct GenParams {
    /// Gaussian-integer idempotent parts have |re|, |im| <= coeff_bound.
    std::int64_t coeff_bound = 3;
    /// Probability that a generated entry is forced into O2.
    double singular_density = 0.0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when out of range.
    void validate() const;
};

/// With probability singular_density one idempotent part (fair coin) is zero
/// and the other is any Gaussian integer in range; otherwise both parts are
/// nonzero Gaussian integers in range.
Bicomplex random_bicomplex(const GenParams& p, SplitMix64& rng);

/// Row-major fill from a stream seeded with p.seed.
BicomplexMatrix random_matrix(std::size_t rows, std::size_t cols, const GenParams& p);
BicomplexMatrix random_matrix(std::size_t rows, std::size_t cols, const GenParams& p,
                              SplitMix64& rng);

struct InvertibleDraw {
    BicomplexMatrix matrix;
    std::size_t rejections = 0;
};

inline constexpr std::size_t kDefaultRejectionLimit = 10000;

/// All entries invertible and det not in O2, by rejection sampling from a
/// stream seeded with p.seed (p.singular_density is ignored).
/// Throws RejectionLimitExceeded after `limit` failed draws.
InvertibleDraw random_invertible_entry_matrix(std::size_t n, const GenParams& p,
                                              std::size_t limit = kDefaultRejectionLimit);

/// Span of a random number (0..ambient_dim) of random Gaussian-integer
/// vectors; repeats a vector now and then so spanning sets can be dependent.
ComplexSubspace random_subspace(std::size_t ambient_dim, const GenParams& p, SplitMix64& rng);

inline constexpr std::size_t kChainReferenceMaxDim = 5;
inline constexpr std::size_t kDetReferenceMaxOrder = 4;

/// Exhaustive top-down recursion over all nested chains, no memoization.
/// Throws GuardExceeded when max(rows, cols) > 5.
std::size_t chain_rank_reference(const BicomplexMatrix& a);

/// Greedy maximal independent subset of the rows, each tested for membership
/// in the span of those kept, working in (z1, z2) coordinates.
std::size_t row_rank_reference(const BicomplexMatrix& a);

/// Sum over permutations in bicomplex arithmetic. Throws NotSquare, and
/// OrderTooLarge above order 4.
Bicomplex det_reference(const BicomplexMatrix& a);

/// Checks level sizes, bounds, nesting and per-level non-singularity.
bool validate_certificate(const BicomplexMatrix& a, const ChainCertificate& certificate);

} // namespace bcrank::oracle
