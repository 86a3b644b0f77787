#include "bcrank/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bcrank {

namespace {

class EntryParser {
public:
    EntryParser(std::string_view text, std::size_t line, std::size_t column)
        : text_(text), line_(line), column_(column) {}

    Bicomplex parse() {
        skip_space();
        if (at_end())
            fail("expected a number or unit (i1, i2, i1i2, e1, e2)");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_space();
        }
        Bicomplex value = term();
        if (negative)
            value = -value;
        for (;;) {
            skip_space();
            if (at_end())
                return value;
            const char op = peek();
            if (op != '+' && op != '-')
                fail("expected '+', '-', ',' or end of line");
            ++pos_;
            skip_space();
            Bicomplex t = term();
            if (op == '+')
                value += t;
            else
                value -= t;
        }
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, column_ + pos_, message);
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Bicomplex term() {
        if (at_end())
            fail("expected a number or unit (i1, i2, i1i2, e1, e2)");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational coeff(digits());
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                const std::size_t at = pos_;
                Integer den = digits();
                if (den == 0) {
                    pos_ = at;
                    fail("expected a positive denominator");
                }
                coeff /= Rational(den);
            }
            skip_space();
            const Bicomplex scale{GaussianRational(coeff)};
            if (!at_end() && (peek() == 'i' || peek() == 'e'))
                return scale * unit();
            return scale;
        }
        if (peek() == 'i' || peek() == 'e')
            return unit();
        fail("expected a number or unit (i1, i2, i1i2, e1, e2)");
    }

    Bicomplex unit() {
        const std::string_view rest = text_.substr(pos_);
        auto take = [&](std::string_view name) {
            if (rest.substr(0, name.size()) != name)
                return false;
            pos_ += name.size();
            return true;
        };
        if (take("i1i2"))
            return Bicomplex::i1i2();
        if (take("i1"))
            return Bicomplex::i1();
        if (take("i2"))
            return Bicomplex::i2();
        if (take("e1"))
            return Bicomplex::e1();
        if (take("e2"))
            return Bicomplex::e2();
        fail("expected a unit (i1, i2, i1i2, e1, e2)");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_;
};

} // namespace

Bicomplex parse_bicomplex(std::string_view text) { return EntryParser(text, 1, 1).parse(); }

MatrixDocument parse_matrix(std::string_view text, std::string source) {
    MatrixDocument doc;
    doc.source = std::move(source);
    std::vector<Bicomplex> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        ++line_no;
        std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;

        std::size_t count = 0;
        std::size_t field = 0;
        for (;;) {
            std::size_t comma = line.find(',', field);
            if (comma == std::string_view::npos)
                comma = line.size();
            const std::string_view entry = line.substr(field, comma - field);
            entries.push_back(EntryParser(entry, line_no, field + 1).parse());
            const auto lead = entry.find_first_not_of(" \t");
            doc.positions.push_back({line_no, field + 1 + (lead == std::string_view::npos ? 0 : lead)});
            ++count;
            if (comma == line.size())
                break;
            field = comma + 1;
        }
        if (rows == 0)
            cols = count;
        else if (count != cols)
            throw ParseError(line_no, 1,
                             "row has " + std::to_string(count) + " entries, expected " +
                                 std::to_string(cols));
        ++rows;
    }
    if (rows == 0)
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "expected at least one matrix row");
    doc.matrix = BicomplexMatrix(rows, cols, std::move(entries));
    return doc;
}

MatrixDocument load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str(), path.string());
}

std::string serialize(const BicomplexMatrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j)
                out += ", ";
            out += to_string(a(i, j));
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json certificate_json(const std::optional<ChainCertificate>& certificate) {
    if (!certificate)
        return nullptr;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const ChainLevel& level : certificate->levels)
        levels.push_back({{"rows", level.rows.indices()}, {"cols", level.cols.indices()}});
    return levels;
}

nlohmann::ordered_json matrix_json(const BicomplexMatrix& a) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json report_json(const RankReport& r) {
    nlohmann::ordered_json j;
    j["chain_rank"] = r.chain_rank;
    j["row_rank"] = r.row_rank;
    j["col_rank"] = r.col_rank;
    j["idem_row_rank"] = r.idem_row_rank;
    j["idem_col_rank"] = r.idem_col_rank;
    j["rank_1A"] = r.rank_1A;
    j["rank_2A"] = r.rank_2A;
    j["det"] = r.det ? nlohmann::ordered_json(to_string(*r.det)) : nlohmann::ordered_json(nullptr);
    j["det_singular"] =
        r.det_singular ? nlohmann::ordered_json(*r.det_singular) : nlohmann::ordered_json(nullptr);
    j["matrix_class"] = to_string(r.matrix_class);
    j["certificate"] = certificate_json(r.certificate);
    return j;
}

std::string report_text(const RankReport& r) {
    std::ostringstream os;
    os << "shape:          " << r.rows << "x" << r.cols << '\n'
       << "matrix_class:   " << to_string(r.matrix_class) << '\n'
       << "chain_rank:     " << r.chain_rank << '\n'
       << "row_rank:       " << r.row_rank << '\n'
       << "col_rank:       " << r.col_rank << '\n'
       << "idem_row_rank:  " << r.idem_row_rank << '\n'
       << "idem_col_rank:  " << r.idem_col_rank << '\n'
       << "rank_1A:        " << r.rank_1A << '\n'
       << "rank_2A:        " << r.rank_2A << '\n';
    if (r.det) {
        os << "det:            " << to_string(*r.det) << '\n'
           << "det_singular:   " << (*r.det_singular ? "true" : "false") << '\n';
    }
    if (r.certificate) {
        os << "certificate:\n";
        for (std::size_t k = 0; k < r.certificate->levels.size(); ++k) {
            const ChainLevel& level = r.certificate->levels[k];
            os << "  B" << k + 1 << ": rows " << to_string(level.rows) << " cols "
               << to_string(level.cols) << '\n';
        }
    } else {
        os << "certificate:    none\n";
    }
    return os.str();
}

} // namespace bcrank
