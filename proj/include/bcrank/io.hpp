#pragma once

#include "bcrank/matrix.hpp"
#include "bcrank/rank.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bcrank {

struct SourcePosition {
    std::size_t line = 0;   // 1-based
    std::size_t column = 0; // 1-based, first character of the entry
};

/// A parsed matrix file with the location of every entry (row-major).
struct MatrixDocument {
    std::string source;
    BicomplexMatrix matrix;
    std::vector<SourcePosition> positions;
};

/// One entry such as "1/2+3i1-e2". Throws ParseError (line 1).
Bicomplex parse_bicomplex(std::string_view text);

/// One row per line, entries separated by commas, '#' starts a comment and
/// blank lines are skipped. Throws ParseError on bad entries, ragged rows or
/// an empty document.
MatrixDocument parse_matrix(std::string_view text, std::string source = "<inline>");

/// Throws Error when the file cannot be read, ParseError on bad content.
MatrixDocument load_matrix(const std::filesystem::path& path);

/// Rows on separate lines, entries joined by ", ", each in canonical literal form.
std::string serialize(const BicomplexMatrix& a);

nlohmann::ordered_json certificate_json(const std::optional<ChainCertificate>& certificate);
nlohmann::ordered_json matrix_json(const BicomplexMatrix& a);

/// Stable schema: chain_rank, row_rank, col_rank, idem_row_rank, idem_col_rank,
/// rank_1A, rank_2A, det, det_singular, matrix_class, certificate.
nlohmann::ordered_json report_json(const RankReport& report);
std::string report_text(const RankReport& report);

} // namespace bcrank
