#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcrank {

/// A worked example: a matrix, optionally a candidate submatrix, and the
/// expected value of each named quantity.
///
/// Quantities: chain_rank, row_rank, col_rank, rank_1A, rank_2A,
/// idem_row_rank, idem_col_rank, det, det_singular, matrix_class and, when a
/// witness is given, witness_is_submatrix and witness_components_are_submatrices.
struct VerifyCase {
    std::string id;
    std::string description;
    std::string matrix;
    std::string witness;
    std::vector<std::pair<std::string, std::string>> expected;
};

struct CaseResult {
    std::string id;
    bool passed = false;
    /// "quantity: expected X, got Y" for each mismatch.
    std::vector<std::string> mismatches;
};

/// The built-in worked examples on bicomplex rank.
std::vector<VerifyCase> builtin_cases();

/// Every quantity for the case's matrix (and witness).
std::map<std::string, std::string> measure(const VerifyCase& c);

CaseResult run_case(const VerifyCase& c);

/// Prints one PASS/FAIL line per case and returns 0 when all pass, else 1.
int run_verify(const std::vector<VerifyCase>& cases, std::ostream& out);

} // namespace bcrank
