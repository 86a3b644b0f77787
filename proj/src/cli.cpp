#include "bcrank/cli.hpp"

#include "bcrank/io.hpp"
#include "bcrank/oracle.hpp"
#include "bcrank/rank.hpp"
#include "bcrank/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace bcrank::cli {

namespace {

nlohmann::ordered_json draw_trial(const ExploreOptions& o, std::size_t trial) {
    oracle::GenParams params;
    params.coeff_bound = o.bound;
    params.seed = oracle::derive_seed(o.seed, trial);
    const oracle::InvertibleDraw draw = oracle::random_invertible_entry_matrix(o.n, params);
    ChainRankOptions chain_options;
    chain_options.max_dim = o.max_dim;
    // Trials already run concurrently when jobs > 1.
    const ChainRankResult chain = o.jobs > 1 ? chain_rank_serial(draw.matrix, chain_options)
                                             : chain_rank(draw.matrix, chain_options);
    return explore_record(o, trial, draw.matrix, draw.rejections, chain);
}

int report_error(std::ostream& err, const std::exception& e, int code) {
    err << "error: " << e.what() << '\n';
    return code;
}

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return report_error(err, e, kParseError);
    } catch (const GuardExceeded& e) {
        return report_error(err, e, kGuardViolation);
    } catch (const std::exception& e) {
        return report_error(err, e, kParseError);
    }
}

int cmd_rank(const std::string& file, std::size_t max_dim, std::ostream& out) {
    const MatrixDocument doc = load_matrix(file);
    ChainRankOptions options;
    options.max_dim = max_dim;
    const ChainRankResult r = chain_rank(doc.matrix, options);
    out << r.rank << '\n';
    if (r.certificate)
        for (std::size_t k = 0; k < r.certificate->levels.size(); ++k)
            out << "B" << k + 1 << ": rows " << to_string(r.certificate->levels[k].rows)
                << " cols " << to_string(r.certificate->levels[k].cols) << '\n';
    return kSuccess;
}

int cmd_report(const std::string& file, bool json, std::size_t max_dim, std::ostream& out) {
    const MatrixDocument doc = load_matrix(file);
    ChainRankOptions options;
    options.max_dim = max_dim;
    const RankReport r = rank_report(doc.matrix, options);
    if (json)
        out << report_json(r).dump(2) << '\n';
    else
        out << report_text(r);
    return kSuccess;
}

int cmd_verify(bool list, std::ostream& out) {
    const auto cases = builtin_cases();
    if (list) {
        for (const VerifyCase& c : cases)
            out << c.id << '\n';
        return kSuccess;
    }
    return run_verify(cases, out);
}

int cmd_oracle(const std::string& file, std::ostream& out) {
    const BicomplexMatrix a = load_matrix(file).matrix;
    if (std::max(a.rows(), a.cols()) > oracle::kChainReferenceMaxDim)
        throw GuardExceeded("oracle comparison limited to " +
                            std::to_string(oracle::kChainReferenceMaxDim) + " rows/columns");
    bool agree = true;
    auto line = [&](const char* what, const std::string& engine, const std::string& reference) {
        const bool ok = engine == reference;
        agree = agree && ok;
        out << (ok ? "agree     " : "DISAGREE  ") << what << ": engine " << engine
            << ", reference " << reference << '\n';
    };
    line("chain_rank", std::to_string(chain_rank(a).rank),
         std::to_string(oracle::chain_rank_reference(a)));
    line("row_rank", std::to_string(row_rank(a)), std::to_string(oracle::row_rank_reference(a)));
    if (a.is_square()) {
        // The permutation-sum reference stops at order 4; cofactors cover order 5.
        const Bicomplex reference = a.rows() <= oracle::kDetReferenceMaxOrder
                                        ? oracle::det_reference(a)
                                        : det_laplace(a);
        line("det", to_string(det_idempotent(a)), to_string(reference));
    }
    return agree ? kSuccess : kCheckFailed;
}

} // namespace

nlohmann::ordered_json explore_record(const ExploreOptions& o, std::size_t trial,
                                      const BicomplexMatrix& matrix, std::size_t rejections,
                                      const ChainRankResult& chain) {
    nlohmann::ordered_json rec;
    rec["seed"] = o.seed;
    rec["n"] = o.n;
    rec["trial"] = trial;
    rec["rejections"] = rejections;
    rec["det"] = to_string(det_idempotent(matrix));
    rec["chain_rank"] = chain.rank;
    if (chain.rank < o.n) {
        rec["status"] = o.n <= 3 ? "THEOREM_VIOLATION" : "CANDIDATE";
        rec["certificate"] = certificate_json(chain.certificate);
        rec["matrix"] = matrix_json(matrix);
    } else {
        rec["status"] = "ok";
    }
    return rec;
}

int explore(const ExploreOptions& o, std::ostream& out, std::ostream& err) {
    if (o.n < 2 || o.trials < 1) {
        err << "error: explore needs --n >= 2 and --trials >= 1\n";
        return kParseError;
    }
    if (o.n > o.max_dim) {
        err << "error: order " << o.n << " exceeds chain-rank guard " << o.max_dim << '\n';
        return kGuardViolation;
    }
    if (o.bound < 1) {
        err << "error: --bound must be >= 1\n";
        return kParseError;
    }

    std::size_t flagged = 0;
    auto emit = [&](const nlohmann::ordered_json& rec) {
        if (rec["status"] != "ok")
            ++flagged;
        out << rec.dump() << '\n';
    };

    if (o.jobs <= 1) {
        for (std::size_t t = 0; t < o.trials; ++t)
            emit(draw_trial(o, t));
    } else {
        const auto trials = static_cast<std::ptrdiff_t>(o.trials);
#pragma omp parallel for schedule(dynamic) num_threads(o.jobs)
        for (std::ptrdiff_t t = 0; t < trials; ++t) {
            const auto rec = draw_trial(o, static_cast<std::size_t>(t));
#pragma omp critical(bcrank_explore_emit)
            emit(rec);
        }
    }
    out.flush();

    const bool theorem_range = o.n <= 3;
    err << "explore: n=" << o.n << " trials=" << o.trials << " seed=" << o.seed
        << " bound=" << o.bound << ' ' << (theorem_range ? "violations=" : "candidates=")
        << flagged << '\n';
    return theorem_range && flagged > 0 ? kTheoremViolation : kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rank computations for bicomplex matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t max_dim = kDefaultMaxDim;
    app.add_option("--max-dim", max_dim, "Chain-rank dimension guard")->check(CLI::Range(1, 64));

    std::string file;
    auto* rank = app.add_subcommand("rank", "Chain rank with its certificate");
    rank->add_option("file", file, "Matrix file")->required();

    bool json = false;
    auto* report = app.add_subcommand("report", "All rank notions for a matrix");
    report->add_option("file", file, "Matrix file")->required();
    report->add_flag("--json", json, "Emit JSON");

    bool list = false;
    auto* verify = app.add_subcommand("verify", "Replay the built-in worked examples");
    verify->add_flag("--list", list, "List case identifiers only");

    ExploreOptions eo;
    auto* explore_cmd = app.add_subcommand("explore", "Random search on all-invertible matrices");
    explore_cmd->add_option("--n", eo.n, "Matrix order")->required();
    explore_cmd->add_option("--trials", eo.trials, "Number of trials")->required();
    explore_cmd->add_option("--seed", eo.seed, "Master seed")->required();
    explore_cmd->add_option("--bound", eo.bound, "Gaussian-integer coefficient bound");
    explore_cmd->add_option("--jobs", eo.jobs, "Worker threads");

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare engine against brute-force references");
    oracle_cmd->add_option("file", file, "Matrix file")->required();

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kParseError;
    }

    if (*rank)
        return guarded(err, [&] { return cmd_rank(file, max_dim, out); });
    if (*report)
        return guarded(err, [&] { return cmd_report(file, json, max_dim, out); });
    if (*verify)
        return cmd_verify(list, out);
    if (*explore_cmd) {
        eo.max_dim = max_dim;
        return guarded(err, [&] { return explore(eo, out, err); });
    }
    return guarded(err, [&] { return cmd_oracle(file, out); });
}

} // namespace bcrank::cli
