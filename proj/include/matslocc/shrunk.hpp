#ifndef MATSLOCC_SHRUNK_HPP
#define MATSLOCC_SHRUNK_HPP

#include <optional>
#include <vector>

#include "matslocc/rank.hpp"

namespace matslocc {

/// Certificate that S shrinks U: S(U) is strictly smaller than U. Bounds the
/// maximal rank by d - shrinkage.
struct ShrunkWitness {
    Subspace u;
    Subspace su;
    std::size_t shrinkage() const { return u.dim() - su.dim(); }
};

/// Exact check that S maps U into a strictly smaller subspace; no randomness.
std::optional<ShrunkWitness> verify_shrunk(const MatrixSpace& s, const Subspace& u);

/// The textbook witness for A(p,q,d): U = span{e_q..e_{d-1}}.
ShrunkWitness canonical_shrunk_of_compression(std::size_t p, std::size_t q, std::size_t d);

/// S ⊗ M(k): the k-th blow-up.
MatrixSpace blowup(const MatrixSpace& s, std::size_t k,
                   std::size_t size_guard = kDefaultSizeGuard);

/// Full-rank element found in the k-th blow-up, re-verified exactly.
struct BlowupCertificate {
    std::size_t k = 0;
    MaxRankReport report;
    std::size_t exact_rank = 0;  // == k*d after verification
};

/// Outcome of the blow-up sweep. NO ("no shrunk subspace") is certain and
/// certificate-backed; YES is Monte Carlo with the stated one-sided error.
struct ShrunkDecision {
    bool shrunk = false;
    std::optional<BlowupCertificate> certificate;
    Rational failure_bound;  // bound on Pr[wrong] when shrunk == true
    std::size_t largest_k_tested = 0;
};

ShrunkDecision has_shrunk_subspace(const MatrixSpace& s, std::size_t trials,
                                   std::uint64_t seed, const PrimeField& f,
                                   int jobs = 0,
                                   std::size_t size_guard = kDefaultSizeGuard);

struct NcrkBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    // r_k per tested blow-up order, for the record.
    std::vector<std::pair<std::size_t, std::size_t>> blowup_ranks;
    std::size_t best_witness_shrinkage = 0;
};

/// lower = max_k ceil(r_k/k) from randomized blow-up ranks; upper = d minus
/// the best verified witness shrinkage. Witnesses that fail verification are
/// ignored; a witness contradicting a full-rank certificate throws
/// InconsistentEvidence.
NcrkBounds ncrk_bounds(const MatrixSpace& s, const std::vector<Subspace>& witnesses,
                       std::size_t trials, std::uint64_t seed, const PrimeField& f,
                       int jobs = 0, std::size_t size_guard = kDefaultSizeGuard);

} // namespace matslocc

#endif
