#include "matslocc/verify.hpp"

#include <cmath>

#include "matslocc/errors.hpp"

namespace matslocc {

namespace {

struct SuiteBuilder {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, Json observed, Json expected) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        c["observed"] = std::move(observed);
        c["expected"] = std::move(expected);
        checks.push_back(std::move(c));
        all_pass = all_pass && pass;
    }

    Json finish(const std::string& suite) {
        Json out;
        out["suite"] = suite;
        out["pass"] = all_pass;
        out["checks"] = std::move(checks);
        return out;
    }
};

Json paper_values(const RunConfig& cfg) {
    SuiteBuilder b;
    PrimeField f = cfg.field();

    // Skew space ranks: mrk = d-1 for odd d, and the tensor-square witness
    // restores full rank d^2.
    for (std::size_t d : {3, 5}) {
        auto rep = max_rank_randomized(skew_space(d), cfg.trials, cfg.seed, f, cfg.jobs);
        b.add("skew(" + std::to_string(d) + ") mrk", rep.rank == d - 1, rep.rank, d - 1);
        std::size_t pr = rank_exact(skew_tensor_square_witness(d));
        b.add("skew(" + std::to_string(d) + ") tensor-square witness rank", pr == d * d, pr, d * d);
    }

    // mrk(A(1,1,3,3)) = 2.
    auto a113 = build_compression_space({1, 1, 3});
    auto rep = max_rank_randomized(a113, cfg.trials, cfg.seed, f, cfg.jobs);
    b.add("A(1,1,3) mrk", rep.rank == 2, rep.rank, 2);

    // mrk(A(1,1,3)^{x2}) = 1+2+2+1 = 6, three ways.
    Integer pair = mrk_tensor_pair({1, 1, 3}, {1, 1, 3});
    Integer power = mrk_tensor_power(1, 1, 3, 2);
    auto rep2 = max_rank_randomized(tensor_power(a113, 2, cfg.size_guard), cfg.trials, cfg.seed, f,
                                    cfg.jobs);
    bool six = pair == 6 && power == 6 && rep2.rank == 6;
    b.add("A(1,1,3) tensor square mrk (pair/power/randomized)", six,
          Json::array({pair.get_str(), power.get_str(), rep2.rank}), 6);

    // Shrunk decisions: skew(3) has none, A(1,1,3) does.
    auto dec = has_shrunk_subspace(skew_space(3), cfg.trials, cfg.seed, f, cfg.jobs, cfg.size_guard);
    b.add("skew(3) has no shrunk subspace", !dec.shrunk && dec.certificate && dec.certificate->k == 2,
          decision_to_json(dec), "no-shrunk at k=2");
    auto wit = canonical_shrunk_of_compression(1, 1, 3);
    b.add("A(1,1,3) canonical shrunk witness", wit.shrinkage() == 1, wit.shrinkage(), 1);

    // Asymptotic value for A(1,1,3): 2*sqrt(2).
    auto prof = asymptotic_profile(1, 1, 3);
    bool asym = std::abs(prof.mrk_infinity - 2.0 * std::sqrt(2.0)) < 1e-9;
    b.add("A(1,1,3) asymptotic mrk = 2*sqrt(2)", asym, json_double(prof.mrk_infinity),
          json_double(2.0 * std::sqrt(2.0)));

    return b.finish("paper-values");
}

Json formulas_vs_oracle(const RunConfig& cfg) {
    SuiteBuilder b;
    PrimeField f = cfg.field();
    const std::size_t triples[][3] = {{1, 1, 3}, {1, 1, 4}, {1, 2, 4}, {2, 1, 5}};
    for (const auto& t : triples) {
        auto space = build_compression_space({t[0], t[1], t[2]});
        for (std::size_t copies = 1; copies <= 3; ++copies) {
            Integer formula = mrk_tensor_power(t[0], t[1], t[2], copies);
            // total basis storage, not just one matrix, must stay in budget
            double cost = std::pow(static_cast<double>(space.dim()), copies) *
                          std::pow(static_cast<double>(t[2] * t[2]), copies);
            if (cost > static_cast<double>(cfg.size_guard)) continue;
            std::size_t randomized;
            try {
                auto sp = tensor_power(space, copies, cfg.size_guard);
                randomized = max_rank_randomized(sp, cfg.trials, cfg.seed, f, cfg.jobs).rank;
            } catch (const SizeGuardExceeded&) {
                continue;
            }
            std::string name = "A(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                               std::to_string(t[2]) + ")^" + std::to_string(copies);
            b.add(name, formula == Integer(static_cast<unsigned long>(randomized)), randomized,
                  formula.get_str());
        }
    }
    // Pair formula against the power formula on squares.
    for (const auto& t : triples) {
        Integer pair = mrk_tensor_pair({t[0], t[1], t[2]}, {t[0], t[1], t[2]});
        Integer power = mrk_tensor_power(t[0], t[1], t[2], 2);
        std::string name = "pair-vs-power A(" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                           "," + std::to_string(t[2]) + ")";
        b.add(name, pair == power, pair.get_str(), power.get_str());
    }
    return b.finish("formulas-vs-oracle");
}

Json invariants(const RunConfig& cfg) {
    SuiteBuilder b;

    // Divergence identity and strict alpha bounds for every
    // maximal-compression triple with d <= 30.
    bool div_ok = true, bounds_ok = true, strict_ok = true;
    for (std::size_t d = 3; d <= 30; ++d)
        for (std::size_t p = 1; p < d; ++p)
            for (std::size_t q = 1; p + q < d; ++q) {
                auto prof = asymptotic_profile(p, q, d);
                div_ok = div_ok && std::abs(prof.div_pm - prof.div_qm) < 1e-12;
                double qp = prof.q_prime.get_d(), pp = prof.p_prime.get_d();
                bounds_ok = bounds_ok && qp < prof.alpha && prof.alpha < 1.0 - pp;
                strict_ok = strict_ok && prof.mrk_infinity < static_cast<double>(d);
            }
    b.add("divergence identity (d<=30)", div_ok, div_ok, true);
    b.add("q' < alpha < 1-p' (d<=30)", bounds_ok, bounds_ok, true);
    b.add("asymptotic mrk < d (d<=30)", strict_ok, strict_ok, true);

    // Fekete superadditivity of log ranks for (1,1,3).
    bool fekete = true;
    for (std::size_t m = 1; m <= 11; ++m)
        for (std::size_t n = 1; m + n <= 12; ++n) {
            Integer lhs = mrk_tensor_power(1, 1, 3, m + n);
            Integer rhs = mrk_tensor_power(1, 1, 3, m) * mrk_tensor_power(1, 1, 3, n);
            fekete = fekete && lhs >= rhs;
        }
    b.add("Fekete superadditivity (1,1,3), m+n<=12", fekete, fekete, true);

    // Binomial tail sandwich on a small grid.
    bool sandwich = true;
    const struct { std::size_t n, np; Rational prob; } grid[] = {
        {20, 5, Rational(1, 2)}, {10, 2, Rational(2, 5)}, {40, 9, Rational(1, 3)},
    };
    for (const auto& g : grid) {
        auto [lo, hi] = binomial_tail_bounds(g.n, g.np, g.prob.get_d());
        double exact = binomial_tail_exact(g.n, g.np, g.prob).get_d();
        sandwich = sandwich && lo <= exact && exact <= hi;
    }
    b.add("binomial tail sandwich", sandwich, sandwich, true);

    // mrk <= ncrk <= 2*mrk sandwich on small fixtures.
    PrimeField f = cfg.field();
    bool ncrk_ok = true;
    {
        auto skew3 = skew_space(3);
        auto nb = ncrk_bounds(skew3, {}, cfg.trials, cfg.seed, f, cfg.jobs, cfg.size_guard);
        auto mrk = max_rank_randomized(skew3, cfg.trials, cfg.seed, f, cfg.jobs).rank;
        ncrk_ok = ncrk_ok && mrk <= nb.upper && nb.lower <= 2 * mrk && nb.lower == 3 && nb.upper == 3;

        auto a113 = build_compression_space({1, 1, 3});
        auto wit = canonical_shrunk_of_compression(1, 1, 3);
        auto nb2 = ncrk_bounds(a113, {wit.u}, cfg.trials, cfg.seed, f, cfg.jobs, cfg.size_guard);
        auto mrk2 = max_rank_randomized(a113, cfg.trials, cfg.seed, f, cfg.jobs).rank;
        ncrk_ok = ncrk_ok && nb2.lower == 2 && nb2.upper == 2 && mrk2 <= 3 - wit.shrinkage();
    }
    b.add("ncrk sandwich on fixtures", ncrk_ok, ncrk_ok, true);

    return b.finish("invariants");
}

} // namespace

Json run_verify_suite(const std::string& suite, const RunConfig& cfg) {
    if (suite == "paper-values") return paper_values(cfg);
    if (suite == "formulas-vs-oracle") return formulas_vs_oracle(cfg);
    if (suite == "invariants") return invariants(cfg);
    throw UnknownSuite("unknown suite '" + suite +
                       "'; expected paper-values, formulas-vs-oracle, or invariants");
}

} // namespace matslocc
