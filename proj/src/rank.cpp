#include "matslocc/rank.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matslocc/errors.hpp"
#include "matslocc/rng.hpp"

namespace matslocc {

std::size_t MaxRankReport::verify_exact(const MatrixSpace& s) const {
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(witness_coeffs.size());
    for (Fp c : witness_coeffs)
        coeffs.emplace_back(Rational(Integer(static_cast<unsigned long>(c))));
    return rank_exact(s.evaluate(coeffs));
}

MaxRankReport max_rank_randomized(const MatrixSpace& s, std::size_t trials,
                                  std::uint64_t seed, const PrimeField& f,
                                  int jobs) {
    if (trials < 1) throw InvalidParams("max_rank_randomized: trials must be >= 1");
    const std::size_t dim = s.dim();
    const std::size_t m = s.rows(), n = s.cols();
    const std::uint64_t p = f.modulus();

    // Reduce the canonical basis once; DenominatorDivisibleByP propagates to
    // the caller, who retries with another prime.
    std::vector<FpMatrix> basis_mod;
    basis_mod.reserve(dim);
    for (const auto& b : s.canonical_basis()) basis_mod.push_back(FpMatrix::reduce(b, f));

    std::vector<std::size_t> ranks(trials, 0);
    std::vector<std::vector<Fp>> coeffs(trials);

    auto run_trial = [&](std::size_t t) {
        RngStream stream(seed, t);
        std::vector<Fp> c(dim);
        for (auto& x : c) x = stream.uniform_below(p);
        FpMatrix combo(m, n);
        for (std::size_t k = 0; k < dim; ++k) {
            if (c[k] == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (basis_mod[k].at(i, j) != 0)
                        combo.at(i, j) = f.add(combo.at(i, j), f.mul(c[k], basis_mod[k].at(i, j)));
        }
        ranks[t] = rank_mod_serial(std::move(combo), f);
        coeffs[t] = std::move(c);
    };

#ifdef _OPENMP
    int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
#else
    (void)jobs;
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
#endif

    // Earliest best trial wins, so the report is independent of scheduling.
    std::size_t best = 0;
    for (std::size_t t = 1; t < trials; ++t)
        if (ranks[t] > ranks[best]) best = t;

    MaxRankReport report;
    report.rank = ranks[best];
    report.witness_coeffs = coeffs[best];
    report.prime = p;
    report.trials = trials;
    // Per-trial probability of missing a maximal nonzero minor is at most
    // min(m,n)/p; trials are independent.
    Rational per_trial(Integer(static_cast<unsigned long>(std::min(m, n))),
                       Integer(static_cast<unsigned long>(p)));
    Rational bound(1);
    for (std::size_t t = 0; t < trials; ++t) bound *= per_trial;
    report.failure_bound = bound;
    return report;
}

std::optional<Matrix> rank_boost(const MatrixSpace& s, const Matrix& x) {
    if (!s.contains(x)) throw NotInSpace("rank_boost: X is not in the space");
    const std::size_t rx = rank_exact(x);
    auto ker = kernel_basis(x);
    if (ker.empty()) return std::nullopt;  // X already has full column rank
    Rref im = column_space(x);

    for (const auto& y : s.canonical_basis()) {
        bool escapes = false;
        for (const auto& u : ker) {
            std::vector<GaussianRational> yu = y.apply(u);
            std::vector<GaussianRational> dummy;
            if (!coords_in_rref(im, yu, dummy)) { escapes = true; break; }
        }
        if (!escapes) continue;
        // At most rank(X)+1 values of r can fail, so rank(X)+2 distinct
        // candidates always contain a winner.
        for (long r = 1; r <= static_cast<long>(rx) + 2; ++r) {
            Matrix cand = x + GaussianRational(r) * y;
            if (rank_exact(cand) > rx) return cand;
        }
        throw Error("rank_boost: no boosting scalar found; this contradicts the rank lemma");
    }
    return std::nullopt;
}

Matrix max_rank_greedy(const MatrixSpace& s, const Matrix& start) {
    if (!s.contains(start)) throw NotInSpace("max_rank_greedy: start is not in the space");
    Matrix cur = start;
    while (auto next = rank_boost(s, cur)) cur = std::move(*next);
    return cur;
}

Matrix max_rank_greedy(const MatrixSpace& s) {
    const auto& basis = s.canonical_basis();
    std::size_t best = 0, best_rank = rank_exact(basis[0]);
    for (std::size_t k = 1; k < basis.size(); ++k) {
        std::size_t r = rank_exact(basis[k]);
        if (r > best_rank) { best = k; best_rank = r; }
    }
    return max_rank_greedy(s, basis[best]);
}

} // namespace matslocc
