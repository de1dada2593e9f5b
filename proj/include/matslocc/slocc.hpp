#ifndef MATSLOCC_SLOCC_HPP
#define MATSLOCC_SLOCC_HPP

#include <optional>
#include <string>
#include <vector>

#include "matslocc/shrunk.hpp"

namespace matslocc {

/// Sparse tripartite pure state on H_A ⊗ H_B ⊗ H_C. Normalization is not
/// enforced; every quantity computed here is invariant under nonzero scaling,
/// so irrational normalization constants never enter the arithmetic.
struct TripartiteState {
    std::size_t dim_a = 0, dim_b = 0, dim_c = 0;
    struct Amplitude {
        std::size_t a, b, c;
        GaussianRational value;
    };
    std::vector<Amplitude> amplitudes;

    void validate() const;  // throws InvalidParams on bad indices/duplicates
};

/// M(Ψ): span of the C-basis slices of the amplitude tensor. The slices span
/// the same space as the subnormalized eigenvectors of the AB reduction.
MatrixSpace vec_support(const TripartiteState& state);

/// Randomized maximal Schmidt rank of n copies.
MaxRankReport msrk(const TripartiteState& state, std::size_t copies, std::size_t trials,
                   std::uint64_t seed, const PrimeField& f, int jobs = 0,
                   std::size_t size_guard = kDefaultSizeGuard);

struct ConvertibilityVerdict {
    std::size_t copies = 0;
    MaxRankReport estimate;
    std::size_t target_srk = 0;
    bool convertible = false;
    std::size_t max_copies_extractable = 0;  // floor(log_target msrk)
    bool certified = false;                  // witness re-verified exactly
};

/// Finite-copy convertibility of n copies to a Schmidt-rank-r bipartite state.
/// "yes" is certificate-backed when certify is set; "no" carries the Monte
/// Carlo failure bound of the estimate.
ConvertibilityVerdict can_convert(const TripartiteState& state, std::size_t copies,
                                  std::size_t target_srk, std::size_t trials,
                                  std::uint64_t seed, const PrimeField& f, bool certify = false,
                                  int jobs = 0, std::size_t size_guard = kDefaultSizeGuard);

struct SupermultiplicativityEvidence {
    bool strict = false;
    std::size_t mrk_estimate = 0;
    std::size_t image_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t col_dim = 0;  // d2 in the two-condition test
    bool rectangular_rows_exceed_cols = false;  // d1 > d2, flagged not transposed
};

/// Two-condition test for msrk(Ψ^{⊗2}) > msrk(Ψ)²: mrk < dim Im(S) and
/// mrk < d2 - dim Ker(S).
SupermultiplicativityEvidence strictly_supermultiplicative(
    const TripartiteState& state, std::size_t trials, std::uint64_t seed,
    const PrimeField& f, int jobs = 0);

struct ReachabilityResult {
    bool reachable = false;
    ShrunkDecision decision;
};

/// Whether the d⊗d maximally entangled state is reachable at rate 1
/// asymptotically; equivalent to M(Ψ) having no shrunk subspace.
ReachabilityResult asymptotic_reachability(const TripartiteState& state, std::size_t trials,
                                           std::uint64_t seed, const PrimeField& f,
                                           int jobs = 0,
                                           std::size_t size_guard = kDefaultSizeGuard);

enum class UpperBoundKind { ShrunkFree, CompressionEmbedding, Trivial };

struct RateBounds {
    std::size_t target_srk = 0;
    double lower = 0;
    double upper = 0;
    bool exact = false;
    UpperBoundKind upper_kind = UpperBoundKind::Trivial;
};

/// Bounds on the SLOCC transformation rate toward a Schmidt-rank-r target.
/// The lower bound comes from finite tensor powers; the upper bound is
/// log_r(d), tightened when the space is decided shrunk-free (rate known
/// exactly) or when a verified shrunk witness embeds the space into a
/// maximal-compression space with p, q >= 1.
RateBounds rate_bounds(const TripartiteState& state, std::size_t target_srk,
                       std::size_t max_copies, std::size_t trials, std::uint64_t seed,
                       const PrimeField& f,
                       const std::optional<Subspace>& witness = std::nullopt, int jobs = 0,
                       std::size_t size_guard = kDefaultSizeGuard);

/// The odd-d skew-symmetric construction: dims (d, d, d(d-1)/2), amplitudes
/// ±1 per ordered pair; the global normalization is dropped as a scale flag.
TripartiteState build_skew_state(std::size_t d);

/// P = Σ_{i<j} E_{i,j} ⊗ E_{i,j}, the explicit full-rank element of the
/// tensor square of the skew space; rank_exact(P) = d² for odd d.
Matrix skew_tensor_square_witness(std::size_t d);

// Common fixtures.
TripartiteState ghz_state();
TripartiteState w_state();
/// State whose slices are exactly the generators of A(p,q,d).
TripartiteState compression_state(std::size_t p, std::size_t q, std::size_t d);

} // namespace matslocc

#endif
