#include "bcrank/verify.hpp"

#include "bcrank/io.hpp"
#include "bcrank/rank.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace bcrank {

std::vector<VerifyCase> builtin_cases() {
    return {
        {"e1e2-rank-zero-nonsingular",
         "e1e2-matrix that is neither e1 nor e2; rank 0 although det is not in O2",
         "e1, e2\ne2, e1",
         "",
         {{"matrix_class", "E1E2Matrix"},
          {"chain_rank", "0"},
          {"det", "i1i2"},
          {"det_singular", "false"}}},
        {"three-ranks-differ",
         "4x3 matrix with row rank 4, column rank 3 and rank 1",
         "1, 0, 1\ne2, e1, 0\n0, e2, e1\n0, 0, e1",
         "",
         {{"chain_rank", "1"}, {"row_rank", "4"}, {"col_rank", "3"}}},
        {"component-full-rank-chain-one",
         "both components have rank 2 but the chain rank is 1",
         "e1, e2, 0\ne2, e1, 6",
         "",
         {{"rank_1A", "2"}, {"rank_2A", "2"}, {"chain_rank", "1"}}},
        {"rows-and-columns-independent",
         "rows and columns independent over C1: row rank 2, column rank 3",
         "2, e1, 1\n0, 0, e1",
         "",
         {{"row_rank", "2"}, {"col_rank", "3"}}},
        {"independent-but-singular",
         "rows and columns independent although det lies in O2",
         "1, 2\ne1, 0",
         "",
         {{"row_rank", "2"}, {"col_rank", "2"}, {"det", "-1-i1i2"}, {"det_singular", "true"}}},
        {"row-rank-converse",
         "row rank 2 while the rows of each component are dependent",
         "0, 0, e1\n0, 0, e2",
         "",
         {{"row_rank", "2"}, {"rank_1A", "1"}, {"rank_2A", "1"}}},
        {"col-rank-converse",
         "column rank 2 while the columns of each component are dependent",
         "e1, 0\n0, e2",
         "",
         {{"col_rank", "2"}, {"rank_1A", "1"}, {"rank_2A", "1"}}},
        {"submatrix-converse",
         "component submatrices of 1_A and 2_A that do not assemble to a submatrix of A",
         "1, e1, 0\ne1, e2, e1\n0, 0, 1",
         "1, e1\n0, e2",
         {{"witness_components_are_submatrices", "true"}, {"witness_is_submatrix", "false"}}},
    };
}

namespace {

template <class T>
bool contains_submatrix(const Matrix<T>& big, const Matrix<T>& small) {
    if (small.rows() > big.rows() || small.cols() > big.cols())
        return false;
    for (std::uint64_t r = 1; r < (std::uint64_t{1} << big.rows()); ++r) {
        if (static_cast<std::size_t>(std::popcount(r)) != small.rows())
            continue;
        for (std::uint64_t c = 1; c < (std::uint64_t{1} << big.cols()); ++c) {
            if (static_cast<std::size_t>(std::popcount(c)) != small.cols())
                continue;
            if (submatrix(big, IndexSet::from_mask(r), IndexSet::from_mask(c)) == small)
                return true;
        }
    }
    return false;
}

const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace

std::map<std::string, std::string> measure(const VerifyCase& c) {
    const BicomplexMatrix a = parse_matrix(c.matrix, c.id).matrix;
    const RankReport r = rank_report(a);
    std::map<std::string, std::string> m{
        {"chain_rank", std::to_string(r.chain_rank)},
        {"row_rank", std::to_string(r.row_rank)},
        {"col_rank", std::to_string(r.col_rank)},
        {"rank_1A", std::to_string(r.rank_1A)},
        {"rank_2A", std::to_string(r.rank_2A)},
        {"idem_row_rank", std::to_string(r.idem_row_rank)},
        {"idem_col_rank", std::to_string(r.idem_col_rank)},
        {"matrix_class", to_string(r.matrix_class)},
    };
    if (r.det) {
        m["det"] = to_string(*r.det);
        m["det_singular"] = flag(*r.det_singular);
    }
    if (!c.witness.empty()) {
        const BicomplexMatrix b = parse_matrix(c.witness, c.id + "/witness").matrix;
        const auto [a1, a2] = idempotent_split(a);
        const auto [b1, b2] = idempotent_split(b);
        m["witness_is_submatrix"] = flag(contains_submatrix(a, b));
        m["witness_components_are_submatrices"] =
            flag(contains_submatrix(a1, b1) && contains_submatrix(a2, b2));
    }
    return m;
}

CaseResult run_case(const VerifyCase& c) {
    CaseResult result{c.id, true, {}};
    std::map<std::string, std::string> actual;
    try {
        actual = measure(c);
    } catch (const std::exception& e) {
        result.passed = false;
        result.mismatches.push_back(std::string("error: ") + e.what());
        return result;
    }
    for (const auto& [key, want] : c.expected) {
        const auto it = actual.find(key);
        const std::string got = it == actual.end() ? "<undefined>" : it->second;
        if (got != want) {
            result.passed = false;
            result.mismatches.push_back(key + ": expected " + want + ", got " + got);
        }
    }
    return result;
}

int run_verify(const std::vector<VerifyCase>& cases, std::ostream& out) {
    std::vector<std::string> failed;
    for (const VerifyCase& c : cases) {
        const CaseResult r = run_case(c);
        out << (r.passed ? "PASS  " : "FAIL  ") << r.id << '\n';
        for (const std::string& m : r.mismatches)
            out << "      " << m << '\n';
        if (!r.passed)
            failed.push_back(r.id);
    }
    out << cases.size() - failed.size() << "/" << cases.size() << " cases passed\n";
    if (failed.empty())
        return 0;
    out << "failing:";
    for (const std::string& id : failed)
        out << ' ' << id;
    out << '\n';
    return 1;
}

} // namespace bcrank
