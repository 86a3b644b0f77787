#include "bcrank/rank.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace bcrank {

namespace {

struct MaskPair {
    std::uint64_t rows;
    std::uint64_t cols;

    friend auto operator<=>(const MaskPair&, const MaskPair&) = default;
};

struct Components {
    ComplexMatrix first;
    ComplexMatrix second;
};

bool is_nonsingular_pair(const Components& c, const MaskPair& p) {
    const IndexSet rows = IndexSet::from_mask(p.rows);
    const IndexSet cols = IndexSet::from_mask(p.cols);
    return is_nonsingular(submatrix(c.first, rows, cols)) &&
           is_nonsingular(submatrix(c.second, rows, cols));
}

std::vector<MaskPair> extend(const std::vector<MaskPair>& level, std::size_t n, std::size_t m) {
    std::vector<MaskPair> out;
    for (const MaskPair& p : level)
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint64_t rbit = std::uint64_t{1} << r;
            if (p.rows & rbit)
                continue;
            for (std::size_t c = 0; c < m; ++c) {
                const std::uint64_t cbit = std::uint64_t{1} << c;
                if (!(p.cols & cbit))
                    out.push_back({p.rows | rbit, p.cols | cbit});
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_guard(const BicomplexMatrix& a, const ChainRankOptions& options) {
    const std::size_t dim = std::max(a.rows(), a.cols());
    if (dim > options.max_dim)
        throw GuardExceeded("matrix dimension " + std::to_string(dim) +
                            " exceeds chain-rank guard " + std::to_string(options.max_dim));
    if (dim > kMaskWidth)
        throw GuardExceeded("matrix dimension " + std::to_string(dim) + " exceeds " +
                            std::to_string(kMaskWidth));
}

ChainLevel to_level(const MaskPair& p) {
    return {IndexSet::from_mask(p.rows), IndexSet::from_mask(p.cols)};
}

bool lex_less(const ChainLevel& a, const ChainLevel& b) {
    if (a.rows != b.rows)
        return a.rows < b.rows;
    return a.cols < b.cols;
}

ChainCertificate build_certificate(const std::vector<std::vector<MaskPair>>& levels) {
    std::vector<ChainLevel> chain(levels.size());
    MaskPair current{};
    for (std::size_t k = levels.size(); k-- > 0;) {
        bool found = false;
        ChainLevel best;
        MaskPair best_mask{};
        const bool top = k + 1 == levels.size();
        for (const MaskPair& p : levels[k]) {
            if (!top && ((p.rows & ~current.rows) != 0 || (p.cols & ~current.cols) != 0))
                continue;
            ChainLevel candidate = to_level(p);
            if (!found || lex_less(candidate, best)) {
                best = std::move(candidate);
                best_mask = p;
                found = true;
            }
        }
        // Every chainable pair of order k+1 extends some chainable pair of order k.
        chain[k] = std::move(best);
        current = best_mask;
    }
    return {std::move(chain)};
}

template <class Filter>
ChainRankResult run_levels(const BicomplexMatrix& a, const ChainRankOptions& options,
                           Filter&& filter) {
    check_guard(a, options);
    auto [first, second] = idempotent_split(a);
    const Components comps{std::move(first), std::move(second)};
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();

    std::vector<std::vector<MaskPair>> levels;
    std::vector<MaskPair> level;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!comps.first(i, j).is_zero() && !comps.second(i, j).is_zero())
                level.push_back({std::uint64_t{1} << i, std::uint64_t{1} << j});
    std::sort(level.begin(), level.end());

    const std::size_t max_order = std::min(n, m);
    while (!level.empty()) {
        levels.push_back(level);
        if (levels.size() == max_order)
            break;
        // A chainable pair of order k+1 always contains a chainable pair of
        // order k, so an empty level ends the search.
        level = filter(comps, extend(levels.back(), n, m));
    }

    ChainRankResult result;
    result.rank = levels.size();
    if (result.rank > 0)
        result.certificate = build_certificate(levels);
    return result;
}

} // namespace

ChainRankResult chain_rank_serial(const BicomplexMatrix& a, const ChainRankOptions& options) {
    return run_levels(a, options, [](const Components& comps, std::vector<MaskPair> candidates) {
        std::vector<MaskPair> kept;
        for (const MaskPair& p : candidates)
            if (is_nonsingular_pair(comps, p))
                kept.push_back(p);
        return kept;
    });
}

ChainRankResult chain_rank(const BicomplexMatrix& a, const ChainRankOptions& options) {
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    return run_levels(a, options, [threads](const Components& comps,
                                            std::vector<MaskPair> candidates) {
        const auto count = static_cast<std::ptrdiff_t>(candidates.size());
        std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::ptrdiff_t k = 0; k < count; ++k)
            keep[k] = is_nonsingular_pair(comps, candidates[k]) ? 1 : 0;
        std::vector<MaskPair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (keep[k])
                kept.push_back(candidates[k]);
        return kept;
    });
}

std::size_t row_rank(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return complex_rank(hstack(first, second));
}

std::size_t col_rank(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return complex_rank(vstack(first, second));
}

std::size_t idem_row_rank(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return complex_rank(first) + complex_rank(second);
}

std::size_t idem_col_rank(const BicomplexMatrix& a) {
    const auto [first, second] = idempotent_split(a);
    return complex_rank(first.transposed()) + complex_rank(second.transposed());
}

RankReport rank_report(const BicomplexMatrix& a, const ChainRankOptions& options) {
    ChainRankResult chain = chain_rank(a, options);
    const auto [first, second] = idempotent_split(a);

    RankReport r;
    r.rows = a.rows();
    r.cols = a.cols();
    r.chain_rank = chain.rank;
    r.certificate = std::move(chain.certificate);
    r.row_rank = row_rank(a);
    r.col_rank = col_rank(a);
    r.rank_1A = complex_rank(first);
    r.rank_2A = complex_rank(second);
    r.idem_row_rank = idem_row_rank(a);
    r.idem_col_rank = idem_col_rank(a);
    if (a.is_square()) {
        r.det = Bicomplex::from_idempotent(determinant(first), determinant(second));
        r.det_singular = r.det->is_singular();
    }
    r.matrix_class = classify(a);
    return r;
}

} // namespace bcrank
