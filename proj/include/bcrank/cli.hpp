#pragma once

#include "bcrank/rank.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcrank::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1, ///< verification or oracle disagreement
    kParseError = 2,  ///< unreadable input or bad arguments
    kGuardViolation = 3,
    kTheoremViolation = 4,
};

struct ExploreOptions {
    std::size_t n = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::int64_t bound = 3;
    int jobs = 1;
    std::size_t max_dim = 10;
};

/// One explore record for an already drawn matrix. Flags the record
/// THEOREM_VIOLATION (n <= 3) or CANDIDATE (n >= 4) when chain_rank < n and
/// then carries the certificate and the matrix itself.
nlohmann::ordered_json explore_record(const ExploreOptions& options, std::size_t trial,
                                      const BicomplexMatrix& matrix, std::size_t rejections,
                                      const ChainRankResult& chain);

/// Streams one JSON record per trial to `out` and a summary line to `err`.
int explore(const ExploreOptions& options, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bcrank::cli
