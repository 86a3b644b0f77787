#include "bcrank/io.hpp"
#include "bcrank/oracle.hpp"
#include "bcrank/rank.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bcrank;

namespace {

BicomplexMatrix M(const char* text) { return parse_matrix(text).matrix; }

const char* kThreeRanks = "1, 0, 1\ne2, e1, 0\n0, e2, e1\n0, 0, e1";
const char* kComponentFull = "e1, e2, 0\ne2, e1, 6";
const char* kRowsColsIndependent = "2, e1, 1\n0, 0, e1";

// Cyclic shift C with C(i, i+1 mod 4) = 1.
ComplexMatrix cyclic_power(std::size_t k) {
    ComplexMatrix c(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        c(i, (i + k) % 4) = GaussianRational(1);
    return c;
}

ComplexMatrix combination(long c0, long c1, long c2, long c3) {
    const long coeffs[4] = {c0, c1, c2, c3};
    ComplexMatrix out(4, 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                out(i, j) += GaussianRational(coeffs[k]) * cyclic_power(k)(i, j);
    return out;
}

} // namespace

// All entries invertible and det(A) outside O2, yet chain rank 2. The
// components are (up to scale) the inverses of P = I + 2C and Q = C^2 (I + 2C),
// whose supports are disjoint; the 3x3 minors of each component are the
// entries of its adjugate, so every 3x3 block is singular in one component
// and the chain stops at order 2.
BicomplexMatrix structured_order4() {
    return from_components(combination(1, -2, 4, -8), combination(4, -8, 1, -2));
}

TEST_CASE("complex_rank examples") {
    CHECK(complex_rank(ComplexMatrix::identity(5)) == 5);
    CHECK(complex_rank(ComplexMatrix{{1, 1, 0}, {1, 0, 1}, {0, 0, 1}}) == 3);
    CHECK(complex_rank(ComplexMatrix(3, 4)) == 0);
    CHECK(complex_rank(ComplexMatrix{{1, 2}, {2, 4}, {3, 6}}) == 1);
    const GaussianRational i = GaussianRational::i();
    // Second row is i times the first.
    CHECK(complex_rank(ComplexMatrix{{1, i}, {i, -1}}) == 1);
}

TEST_CASE("chain_rank examples") {
    CHECK(chain_rank(M("e1, e2\ne2, e1")).rank == 0);
    CHECK_FALSE(chain_rank(M("e1, e2\ne2, e1")).certificate.has_value());
    CHECK(chain_rank(M(kThreeRanks)).rank == 1);
    CHECK(chain_rank(M(kComponentFull)).rank == 1);
    CHECK(chain_rank(M(kRowsColsIndependent)).rank == 1);

    const ChainRankResult id = chain_rank(BicomplexMatrix::identity(4));
    CHECK(id.rank == 4);
    REQUIRE(id.certificate);
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<std::size_t> lead(k + 1);
        for (std::size_t j = 0; j <= k; ++j)
            lead[j] = j;
        CHECK(id.certificate->levels[k] == ChainLevel{IndexSet(lead), IndexSet(lead)});
    }
}

TEST_CASE("certificate picks lexicographically smallest pairs") {
    // Invertible entries at (0,1) and (1,0) only.
    const ChainRankResult r = chain_rank(M("e1, 1\n1, 0"));
    CHECK(r.rank == 2);
    REQUIRE(r.certificate);
    CHECK(r.certificate->levels[0] == ChainLevel{{0}, {1}});
    CHECK(r.certificate->levels[1] == ChainLevel{{0, 1}, {0, 1}});
}

TEST_CASE("chain_rank guard") {
    CHECK_THROWS_AS(chain_rank(BicomplexMatrix::identity(11)), GuardExceeded);
    CHECK_THROWS_AS(chain_rank_serial(BicomplexMatrix(2, 11)), GuardExceeded);
    ChainRankOptions wide;
    wide.max_dim = 12;
    CHECK(chain_rank(BicomplexMatrix::identity(11), wide).rank == 11);
    wide.max_dim = 100;
    CHECK_THROWS_AS(chain_rank(BicomplexMatrix(1, 65), wide), GuardExceeded);
}

TEST_CASE("row and column rank examples") {
    CHECK(row_rank(M(kRowsColsIndependent)) == 2);
    CHECK(col_rank(M(kRowsColsIndependent)) == 3);
    CHECK(row_rank(M(kThreeRanks)) == 4);
    CHECK(col_rank(M(kThreeRanks)) == 3);
    CHECK(row_rank(M("0, 0, e1\n0, 0, e2")) == 2);
    CHECK(col_rank(M("e1, 0\n0, e2")) == 2);
    CHECK(row_rank(M("0, 0\n0, 0")) == 0);
    CHECK(col_rank(M("0, 0\n0, 0")) == 0);
}

TEST_CASE("idempotent rank examples") {
    CHECK(idem_row_rank(M(kThreeRanks)) == 6);
    CHECK(idem_col_rank(M(kThreeRanks)) == 6);
    CHECK(idem_row_rank(M("0, 0\n0, 0")) == 0);
    CHECK(idem_row_rank(M("e1, e2\ne2, e1")) == 4);
    CHECK(idem_col_rank(M("e1, e2\ne2, e1")) == 4);
}

TEST_CASE("rank_report examples") {
    const RankReport a = rank_report(M(kComponentFull));
    CHECK(a.chain_rank == 1);
    CHECK(a.rank_1A == 2);
    CHECK(a.rank_2A == 2);
    CHECK(a.row_rank == 2);
    CHECK(a.col_rank == 3);
    CHECK(a.idem_row_rank == 4);
    CHECK(a.idem_col_rank == 4);
    CHECK_FALSE(a.det.has_value());
    CHECK_FALSE(a.det_singular.has_value());

    const RankReport id = rank_report(BicomplexMatrix::identity(2));
    CHECK(id.chain_rank == 2);
    CHECK(id.row_rank == 2);
    CHECK(id.col_rank == 2);
    CHECK(id.idem_row_rank == 4);
    REQUIRE(id.det);
    CHECK(*id.det == Bicomplex(1));
    CHECK(*id.det_singular == false);

    const RankReport t = rank_report(M(kThreeRanks));
    CHECK(t.chain_rank == 1);
    CHECK(t.row_rank == 4);
    CHECK(t.col_rank == 3);
    CHECK(t.idem_row_rank == 6);
}

TEST_CASE("full chain rank forces non-singularity; the converse fails") {
    const BicomplexMatrix w = M("e1, e2\ne2, e1");
    CHECK(chain_rank(w).rank == 0);
    CHECK_FALSE(is_singular_matrix(w));
}

TEST_CASE("structured order-4 matrix with all-invertible entries") {
    const BicomplexMatrix a = structured_order4();
    for (const Bicomplex& x : a.data())
        CHECK(x.is_invertible());
    CHECK_FALSE(is_singular_matrix(a));
    const ChainRankResult r = chain_rank(a);
    CHECK(r.rank == 2);
    CHECK(oracle::chain_rank_reference(a) == 2);
    REQUIRE(r.certificate);
    CHECK(oracle::validate_certificate(a, *r.certificate));
}

TEST_CASE("serial and parallel chain rank agree") {
    oracle::SplitMix64 rng(123);
    for (int t = 0; t < 150; ++t) {
        oracle::GenParams p;
        p.singular_density = (t % 5) / 4.0;
        const std::size_t n = 1 + rng.below(7);
        const std::size_t m = 1 + rng.below(7);
        const BicomplexMatrix a = oracle::random_matrix(n, m, p, rng);
        ChainRankOptions two;
        two.threads = 2;
        const ChainRankResult s = chain_rank_serial(a);
        const ChainRankResult q = chain_rank(a, two);
        CHECK(s.rank == q.rank);
        CHECK(s.certificate == q.certificate);
    }
}

TEST_CASE("rank properties on random matrices") {
    oracle::SplitMix64 rng(31337);
    for (int t = 0; t < 600; ++t) {
        oracle::GenParams p;
        p.singular_density = (t % 4) / 3.0;
        const std::size_t n = 1 + rng.below(4);
        const std::size_t m = 1 + rng.below(4);
        const BicomplexMatrix a = oracle::random_matrix(n, m, p, rng);
        const auto [a1, a2] = idempotent_split(a);
        const std::size_t r1 = complex_rank(a1);
        const std::size_t r2 = complex_rank(a2);
        const ChainRankResult chain = chain_rank(a);

        CHECK(chain.rank <= std::min(r1, r2));
        CHECK((chain.rank == 0) == (classify(a) != MatrixClass::General));
        CHECK(row_rank(a) <= idem_row_rank(a));
        CHECK(col_rank(a) <= idem_col_rank(a));
        CHECK(idem_row_rank(a) == idem_col_rank(a));
        CHECK(idem_row_rank(a) == r1 + r2);
        CHECK(row_rank(a) >= std::max(r1, r2));
        CHECK(col_rank(a) >= std::max(r1, r2));
        if (r1 == n || r2 == n)
            CHECK(row_rank(a) == n);
        if (r1 == m || r2 == m)
            CHECK(col_rank(a) == m);

        CHECK(chain.certificate.has_value() == (chain.rank > 0));
        if (chain.certificate) {
            CHECK(chain.certificate->length() == chain.rank);
            CHECK(oracle::validate_certificate(a, *chain.certificate));
        }
        if (a.is_square() && chain.rank == n) {
            CHECK_FALSE(is_singular_matrix(a));
            CHECK(row_rank(a) == n);
            CHECK(col_rank(a) == n);
        }
        CHECK(chain.rank == oracle::chain_rank_reference(a));
        CHECK(row_rank(a) == oracle::row_rank_reference(a));
    }
}

TEST_CASE("all-invertible non-singular matrices of order <= 3 have full chain rank") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t s = 0; s < 200; ++s) {
            oracle::GenParams p;
            p.seed = oracle::derive_seed(n, s);
            const BicomplexMatrix a = oracle::random_invertible_entry_matrix(n, p).matrix;
            CHECK(chain_rank(a).rank == n);
        }
    }
}
