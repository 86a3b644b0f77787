// One line per acceptance criterion; exit status is nonzero if any fails.

#include "bcrank/cli.hpp"
#include "bcrank/oracle.hpp"
#include "bcrank/rank.hpp"
#include "bcrank/spaces.hpp"
#include "bcrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace bcrank;

namespace {

// Sample sizes and wall-clock limits (seconds).
constexpr int kDetSamples = 500;
constexpr int kInequalitySamples = 1000;
constexpr int kZeroRankSamples = 1000;
constexpr int kTheoremSamplesPerOrder = 500;
constexpr int kOracleSamples = 300;
constexpr int kSpacePairs = 300;
constexpr int kSpaceMatrices = 300;

constexpr double kVerifyLimit = 5;
constexpr double kDetLimit = 30;
constexpr double kInequalityLimit = 60;
constexpr double kZeroRankLimit = 60;
constexpr double kTheoremLimit = 60;
constexpr double kOracleLimit = 60;
constexpr double kSpacesLimit = 60;
constexpr double kExploreLimit = 120;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit,
               const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit;
    const bool pass = o.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("[%s] %s %s: %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs, limit, in_time ? "" : " TIMEOUT");
    std::fflush(stdout);
}

std::size_t dim_below(oracle::SplitMix64& rng, std::size_t max) { return 1 + rng.below(max); }

BicomplexVector row_of(const BicomplexMatrix& a, std::size_t i) {
    return BicomplexVector(a.row(i).begin(), a.row(i).end());
}

BicomplexVector col_of(const BicomplexMatrix& a, std::size_t j) {
    BicomplexVector v;
    for (std::size_t i = 0; i < a.rows(); ++i)
        v.push_back(a(i, j));
    return v;
}

bool reproduces(const BicomplexVector& v, const BicomplexSpan& span) {
    const auto alpha = membership(v, span);
    if (!alpha)
        return false;
    BicomplexVector sum(span.ambient_dim);
    for (std::size_t k = 0; k < span.generators.size(); ++k)
        for (std::size_t i = 0; i < span.ambient_dim; ++i)
            sum[i] += Bicomplex((*alpha)[k]) * span.generators[k][i];
    return sum == v;
}

std::string counted(int bad, int total, const char* what) {
    return std::to_string(total - bad) + "/" + std::to_string(total) + " " + what;
}

} // namespace

int main() {
    criterion("AC1", "worked-example suite", kVerifyLimit, [] {
        const auto cases = builtin_cases();
        std::ostringstream sink;
        const int code = run_verify(cases, sink);
        int bad = 0;
        for (const VerifyCase& c : cases)
            bad += run_case(c).passed ? 0 : 1;
        return Outcome{code == 0 && bad == 0 && cases.size() == 8,
                       counted(bad, static_cast<int>(cases.size()), "cases")};
    });

    criterion("AC2", "determinant identity", kDetLimit, [] {
        oracle::SplitMix64 rng(0xAC2);
        const double densities[] = {0.0, 0.3, 0.7, 1.0};
        int bad = 0;
        for (int t = 0; t < kDetSamples; ++t) {
            oracle::GenParams p;
            p.singular_density = densities[t % 4];
            const std::size_t n = dim_below(rng, 4);
            const BicomplexMatrix a = oracle::random_matrix(n, n, p, rng);
            const Bicomplex d = det_idempotent(a);
            if (!(det_laplace(a) == d && oracle::det_reference(a) == d))
                ++bad;
        }
        return Outcome{bad == 0, counted(bad, kDetSamples, "matrices agree")};
    });

    criterion("AC3", "rank inequalities", kInequalityLimit, [] {
        oracle::SplitMix64 rng(0xAC3);
        int bad = 0;
        for (int t = 0; t < kInequalitySamples; ++t) {
            oracle::GenParams p;
            p.singular_density = (t % 4) / 3.0;
            const BicomplexMatrix a =
                oracle::random_matrix(dim_below(rng, 4), dim_below(rng, 4), p, rng);
            const auto [a1, a2] = idempotent_split(a);
            const std::size_t r1 = complex_rank(a1), r2 = complex_rank(a2);
            const std::size_t rr = row_rank(a), rc = col_rank(a);
            const std::size_t ir = idem_row_rank(a), ic = idem_col_rank(a);
            const bool ok = chain_rank(a).rank <= std::min(r1, r2) && rr <= ir && rc <= ic &&
                            ir == ic && ir == r1 + r2 && rr >= std::max(r1, r2);
            bad += ok ? 0 : 1;
        }
        return Outcome{bad == 0, counted(bad, kInequalitySamples, "matrices satisfy all")};
    });

    criterion("AC4", "zero chain rank iff all entries singular", kZeroRankLimit, [] {
        oracle::SplitMix64 rng(0xAC4);
        int bad = 0, zeros = 0;
        for (int t = 0; t < kZeroRankSamples; ++t) {
            oracle::GenParams p;
            // Mostly high densities so both sides of the equivalence occur.
            p.singular_density = 0.5 + 0.5 * (t % 5) / 4.0;
            const BicomplexMatrix a =
                oracle::random_matrix(dim_below(rng, 4), dim_below(rng, 4), p, rng);
            const bool all_singular =
                std::all_of(a.data().begin(), a.data().end(),
                            [](const Bicomplex& x) { return x.is_singular(); });
            const bool zero = chain_rank(a).rank == 0;
            zeros += zero ? 1 : 0;
            bad += zero == all_singular ? 0 : 1;
        }
        return Outcome{bad == 0, counted(bad, kZeroRankSamples, "matrices") + ", " +
                                     std::to_string(zeros) + " with rank 0"};
    });

    criterion("AC5", "full chain rank for orders 1-3", kTheoremLimit, [] {
        int bad = 0;
        for (std::size_t n = 1; n <= 3; ++n)
            for (int t = 0; t < kTheoremSamplesPerOrder; ++t) {
                oracle::GenParams p;
                p.seed = oracle::derive_seed(0xAC5 + n, static_cast<std::uint64_t>(t));
                const BicomplexMatrix a = oracle::random_invertible_entry_matrix(n, p).matrix;
                bad += chain_rank(a).rank == n ? 0 : 1;
            }
        return Outcome{bad == 0, counted(bad, 3 * kTheoremSamplesPerOrder, "matrices")};
    });

    criterion("AC6", "oracle equivalence", kOracleLimit, [] {
        oracle::SplitMix64 rng(0xAC6);
        int bad = 0;
        for (int t = 0; t < kOracleSamples; ++t) {
            oracle::GenParams p;
            p.singular_density = (t % 4) / 3.0;
            const BicomplexMatrix a =
                oracle::random_matrix(dim_below(rng, 4), dim_below(rng, 4), p, rng);
            const bool ok = chain_rank(a).rank == oracle::chain_rank_reference(a) &&
                            row_rank(a) == oracle::row_rank_reference(a);
            bad += ok ? 0 : 1;
        }
        return Outcome{bad == 0, counted(bad, kOracleSamples, "matrices agree")};
    });

    criterion("AC7", "idempotent spaces", kSpacesLimit, [] {
        oracle::SplitMix64 rng(0xAC7);
        oracle::GenParams p;
        int bad_pairs = 0;
        for (int t = 0; t < kSpacePairs; ++t) {
            const std::size_t n = dim_below(rng, 6);
            const ComplexSubspace v1 = oracle::random_subspace(n, p, rng);
            const ComplexSubspace v2 = oracle::random_subspace(n, p, rng);
            const bool ok = span_dimension(lift(v1, Idempotent::E1)) == v1.dim() &&
                            span_dimension(lift(v2, Idempotent::E2)) == v2.dim() &&
                            intersection_is_trivial(v1, v2) &&
                            direct_sum_dim(v1, v2) == v1.dim() + v2.dim();
            bad_pairs += ok ? 0 : 1;
        }
        int bad_matrices = 0;
        for (int t = 0; t < kSpaceMatrices; ++t) {
            oracle::GenParams q;
            q.singular_density = (t % 4) / 3.0;
            const BicomplexMatrix a =
                oracle::random_matrix(dim_below(rng, 4), dim_below(rng, 4), q, rng);
            const BicomplexSpan rows = idem_row_space_basis(a);
            const BicomplexSpan cols = idem_col_space_basis(a);
            bool ok = true;
            for (std::size_t i = 0; i < a.rows(); ++i)
                ok = ok && reproduces(row_of(a, i), rows);
            for (std::size_t j = 0; j < a.cols(); ++j)
                ok = ok && reproduces(col_of(a, j), cols);
            bad_matrices += ok ? 0 : 1;
        }
        return Outcome{bad_pairs == 0 && bad_matrices == 0,
                       counted(bad_pairs, kSpacePairs, "subspace pairs") + ", " +
                           counted(bad_matrices, kSpaceMatrices, "matrices")};
    });

    criterion("AC8", "explore reproducibility", kExploreLimit, [] {
        const std::vector<std::string> args{"bcrank", "explore", "--n",  "4",
                                            "--trials", "200",   "--seed", "1"};
        std::ostringstream out1, err1, out2, err2;
        const int c1 = cli::run(args, out1, err1);
        const int c2 = cli::run(args, out2, err2);
        const std::string records = out1.str();
        const bool same = records == out2.str() && err1.str() == err2.str();
        const auto lines = std::count(records.begin(), records.end(), '\n');
        std::string summary = err1.str();
        if (!summary.empty() && summary.back() == '\n')
            summary.pop_back();
        return Outcome{c1 == 0 && c2 == 0 && same && lines == 200,
                       std::string(same ? "identical" : "different") + " output, " +
                           std::to_string(lines) + " records (" + summary + ")"};
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
