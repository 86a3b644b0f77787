#include "bcrank/cli.hpp"
#include "bcrank/io.hpp"
#include "bcrank/oracle.hpp"
#include "bcrank/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bcrank;

namespace {

const std::string kGolden = BCRANK_GOLDEN_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "bcrank");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("bcrank_test_" + name);
    std::ofstream(path) << body;
    return path;
}

std::vector<std::string> sorted_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    return lines;
}

} // namespace

TEST_CASE("rank and report commands") {
    const Outcome r = run({"rank", kGolden + "/example_4x3.txt"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "1\nB1: rows {0} cols {0}\n");

    const Outcome rep = run({"report", kGolden + "/rows_cols.txt"});
    CHECK(rep.code == cli::kSuccess);
    CHECK(rep.out.find("row_rank:       2") != std::string::npos);
    CHECK(rep.out.find("col_rank:       3") != std::string::npos);

    const Outcome id = run({"report", "--json", write_temp("id2.txt", "1, 0\n0, 1\n").string()});
    CHECK(id.code == cli::kSuccess);
    const auto j = nlohmann::json::parse(id.out);
    CHECK(j["chain_rank"] == 2);
    CHECK(j["det"] == "1");
    CHECK(j["det_singular"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run({"verify"}).code == cli::kSuccess);
    CHECK(run({"oracle", kGolden + "/five_by_five.txt"}).code == cli::kSuccess);
    CHECK(run({"oracle", kGolden + "/rank_zero.txt"}).code == cli::kSuccess);

    const Outcome guard = run({"oracle", kGolden + "/six_by_six.txt"});
    CHECK(guard.code == cli::kGuardViolation);
    CHECK(guard.err.find("limited to 5") != std::string::npos);

    const auto bad = write_temp("bad.txt", "1, 2\n3, x\n");
    const Outcome parse = run({"rank", bad.string()});
    CHECK(parse.code == cli::kParseError);
    CHECK(parse.err.find("2:") != std::string::npos);
    CHECK(run({"report", kGolden + "/missing.txt"}).code == cli::kParseError);
    CHECK(run({}).code == cli::kParseError);
    CHECK(run({"bogus"}).code == cli::kParseError);
    CHECK(run({"explore", "--n", "4"}).code == cli::kParseError);
    CHECK(run({"explore", "--n", "1", "--trials", "1", "--seed", "0"}).code == cli::kParseError);
    CHECK(run({"explore", "--n", "3", "--trials", "0", "--seed", "0"}).code == cli::kParseError);
    CHECK(run({"--help"}).code == cli::kSuccess);

    std::string eleven;
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j)
            eleven += std::string(i == j ? "1" : "0") + (j == 10 ? "\n" : ", ");
    const auto big = write_temp("eleven.txt", eleven);
    CHECK(run({"rank", big.string()}).code == cli::kGuardViolation);
    const Outcome widened = run({"--max-dim", "11", "rank", big.string()});
    CHECK(widened.code == cli::kSuccess);
    CHECK(widened.out.rfind("11\n", 0) == 0);
    CHECK(run({"explore", "--n", "11", "--trials", "1", "--seed", "0"}).code ==
          cli::kGuardViolation);
}

TEST_CASE("verify listing and failure path") {
    const Outcome list = run({"verify", "--list"});
    CHECK(list.code == cli::kSuccess);
    const auto cases = builtin_cases();
    CHECK(cases.size() == 8);
    for (const VerifyCase& c : cases)
        CHECK(list.out.find(c.id + "\n") != std::string::npos);
    CHECK(list.out.find("PASS") == std::string::npos);

    std::ostringstream ok;
    CHECK(run_verify(cases, ok) == 0);

    auto corrupted = cases;
    REQUIRE_FALSE(corrupted[1].expected.empty());
    corrupted[1].expected[0].second = "99";
    std::ostringstream out;
    CHECK(run_verify(corrupted, out) == 1);
    CHECK(out.str().find(corrupted[1].id) != std::string::npos);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("explore records") {
    const Outcome two = run({"explore", "--n", "2", "--trials", "1", "--seed", "0"});
    CHECK(two.code == cli::kSuccess);
    const auto rec = nlohmann::json::parse(two.out);
    CHECK(rec["chain_rank"] == 2);
    CHECK(rec["status"] == "ok");
    CHECK(rec["n"] == 2);
    CHECK(rec.contains("rejections"));
    CHECK(rec.contains("det"));

    const Outcome control = run({"explore", "--n", "3", "--trials", "500", "--seed", "7"});
    CHECK(control.code == cli::kSuccess);
    CHECK(sorted_lines(control.out).size() == 500);
    CHECK(control.err.find("violations=0") != std::string::npos);

    const Outcome four = run({"explore", "--n", "4", "--trials", "100", "--seed", "3"});
    CHECK(four.code == cli::kSuccess);
    CHECK(sorted_lines(four.out).size() == 100);
    CHECK(four.err.find("candidates=") != std::string::npos);
}

TEST_CASE("flagged records carry the evidence") {
    const BicomplexMatrix a = parse_matrix("1, 1\n1, 1").matrix;
    const ChainRankResult chain = chain_rank(a);
    REQUIRE(chain.rank == 1);

    cli::ExploreOptions control;
    control.n = 2;
    const auto v = cli::explore_record(control, 5, a, 0, chain);
    CHECK(v["status"] == "THEOREM_VIOLATION");
    CHECK(v["trial"] == 5);
    CHECK(v["certificate"].size() == 1);
    CHECK(parse_matrix(serialize(a)).matrix == a);
    CHECK(v.contains("matrix"));

    cli::ExploreOptions open;
    open.n = 4;
    const BicomplexMatrix s = load_matrix(kGolden + "/structured_4x4.txt").matrix;
    const auto c = cli::explore_record(open, 9, s, 0, chain_rank(s));
    CHECK(c["status"] == "CANDIDATE");
    CHECK(c["chain_rank"] == 2);
    CHECK(c["certificate"].size() == 2);
    CHECK(c["matrix"].size() == 4);
    const Outcome audit = run({"oracle", kGolden + "/structured_4x4.txt"});
    CHECK(audit.code == cli::kSuccess);


    const BicomplexMatrix id = BicomplexMatrix::identity(4);
    const auto ok = cli::explore_record(open, 0, id, 2, chain_rank(id));
    CHECK(ok["status"] == "ok");
    CHECK(ok["rejections"] == 2);
    CHECK_FALSE(ok.contains("certificate"));
}

TEST_CASE("explore determinism") {
    const std::vector<std::string> args{"explore", "--n", "4", "--trials", "60", "--seed", "11"};
    const Outcome first = run(args);
    const Outcome second = run(args);
    CHECK(first.code == cli::kSuccess);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);

    auto parallel_args = args;
    parallel_args.insert(parallel_args.end(), {"--jobs", "3"});
    const Outcome parallel = run(parallel_args);
    CHECK(parallel.code == cli::kSuccess);
    CHECK(sorted_lines(parallel.out) == sorted_lines(first.out));
    CHECK(parallel.err == first.err);

    const Outcome other = run({"explore", "--n", "4", "--trials", "60", "--seed", "12"});
    CHECK(other.out != first.out);
}
