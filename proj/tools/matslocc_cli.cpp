#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "matslocc/errors.hpp"
#include "matslocc/verify.hpp"

using namespace matslocc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSizeGuard = 3;

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

Json analyze_space(const MatrixSpace& s, const RunConfig& cfg) {
    PrimeField f = cfg.field();
    Json out;
    out["rows"] = s.rows();
    out["cols"] = s.cols();
    out["dim"] = s.dim();

    auto rep = max_rank_randomized(s, cfg.trials, cfg.seed, f, cfg.jobs);
    out["mrk_randomized"] = report_to_json(rep);
    if (cfg.certify) out["mrk_randomized_certified_rank"] = rep.verify_exact(s);

    Matrix greedy = max_rank_greedy(s);
    out["mrk_greedy"] = rank_exact(greedy);

    out["image_dim"] = image(s).dim();
    out["kernel_dim"] = kernel(s).dim();

    if (s.is_square()) {
        auto dec = has_shrunk_subspace(s, cfg.trials, cfg.seed, f, cfg.jobs, cfg.size_guard);
        out["shrunk"] = decision_to_json(dec);
        auto nb = ncrk_bounds(s, {}, cfg.trials, cfg.seed, f, cfg.jobs, cfg.size_guard);
        Json nj;
        nj["lower"] = nb.lower;
        nj["upper"] = nb.upper;
        Json ranks = Json::array();
        for (auto [k, r] : nb.blowup_ranks) ranks.push_back({{"k", k}, {"rank", r}});
        nj["blowup_ranks"] = std::move(ranks);
        out["ncrk_bounds"] = std::move(nj);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for matrix-space ranks and "
                 "tripartite-to-bipartite SLOCC convertibility"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    RunConfig cfg;
    bool pretty = false;
    app.add_option("--seed", cfg.seed, "RNG seed")->envname("MATSLOCC_SEED");
    app.add_option("--trials", cfg.trials, "Schwartz-Zippel trials")->envname("MATSLOCC_TRIALS");
    app.add_option("--prime", cfg.prime, "prime modulus override (must be 1 mod 4)")
        ->envname("MATSLOCC_PRIME");
    app.add_option("--size-guard", cfg.size_guard, "max entries of any materialized matrix")
        ->envname("MATSLOCC_SIZE_GUARD");
    app.add_flag("--certify", cfg.certify, "re-verify witnesses with exact arithmetic")
        ->envname("MATSLOCC_CERTIFY");
    app.add_option("--jobs", cfg.jobs, "parallelism width (0 = auto)")->envname("MATSLOCC_JOBS");
    app.add_flag("--pretty", pretty, "indent JSON output")->envname("MATSLOCC_PRETTY");

    std::string space_file, state_file, suite;
    std::size_t copies = 1, target = 2, max_copies = 0;
    std::size_t cp = 0, cq = 0, cd = 0, ccopies = 0;
    bool asymptotic = false;

    auto* analyze = app.add_subcommand("analyze", "analyze a matrix space file");
    analyze->add_option("space-file", space_file)->required();

    auto* convert = app.add_subcommand("convert", "finite-copy SLOCC convertibility");
    convert->add_option("state-file", state_file)->required();
    convert->add_option("--copies", copies, "number of copies")->default_val(1);
    convert->add_option("--target", target, "target Schmidt rank")->required();

    auto* rate = app.add_subcommand("rate", "asymptotic transformation rate bounds");
    rate->add_option("state-file", state_file)->required();
    rate->add_option("--target", target, "target Schmidt rank (>= 2)")->required();
    rate->add_option("--max-copies", max_copies, "largest tensor power for the lower bound");

    auto* compression = app.add_subcommand("compression", "closed-form A(p,q,d) ranks");
    compression->add_option("--p", cp)->required();
    compression->add_option("--q", cq)->required();
    compression->add_option("--d", cd)->required();
    compression->add_option("--copies", ccopies, "exact tensor-power maximal rank");
    compression->add_flag("--asymptotic", asymptotic, "asymptotic profile instead");

    auto* verify = app.add_subcommand("verify", "run a built-in check suite");
    verify->add_option("--suite", suite, "paper-values | formulas-vs-oracle | invariants")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            emit(analyze_space(load_matrix_space(space_file), cfg), pretty);
        } else if (*convert) {
            auto st = load_state(state_file);
            auto v = can_convert(st, copies, target, cfg.trials, cfg.seed, cfg.field(),
                                 cfg.certify, cfg.jobs, cfg.size_guard);
            emit(verdict_to_json(v), pretty);
        } else if (*rate) {
            auto st = load_state(state_file);
            std::size_t mc = max_copies ? max_copies : 3;
            auto r = rate_bounds(st, target, mc, cfg.trials, cfg.seed, cfg.field(), std::nullopt,
                                 cfg.jobs, cfg.size_guard);
            emit(rate_to_json(r), pretty);
        } else if (*compression) {
            Json out;
            if (asymptotic) {
                out = profile_to_json(asymptotic_profile(cp, cq, cd));
            } else {
                if (ccopies == 0) throw InvalidParams("compression: need --copies or --asymptotic");
                out["p"] = cp;
                out["q"] = cq;
                out["d"] = cd;
                out["copies"] = ccopies;
                out["mrk"] = mrk_tensor_power(cp, cq, cd, ccopies).get_str();
            }
            emit(out, pretty);
        } else if (*verify) {
            Json out = run_verify_suite(suite, cfg);
            emit(out, pretty);
            if (!out["pass"].get<bool>()) return 1;
        }
    } catch (const SizeGuardExceeded& e) {
        std::cerr << "size guard exceeded: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
