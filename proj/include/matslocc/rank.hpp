#ifndef MATSLOCC_RANK_HPP
#define MATSLOCC_RANK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "matslocc/matrix_space.hpp"
#include "matslocc/prime_field.hpp"

namespace matslocc {

/// Result of a randomized maximal-rank estimate. `rank` is a certain lower
/// bound on mrk(S) once the witness has been re-verified; `failure_bound`
/// bounds Pr[rank < mrk(S)] by the Schwartz-Zippel argument.
struct MaxRankReport {
    std::size_t rank = 0;
    std::vector<Fp> witness_coeffs;
    std::uint64_t prime = 0;
    std::size_t trials = 0;
    Rational failure_bound;

    /// Substitute the witness coefficients (lifted to integers) back into the
    /// space and compute the exact rank; certifies rank as a lower bound.
    std::size_t verify_exact(const MatrixSpace& s) const;
};

/// Schwartz-Zippel estimate of mrk(S): best rank over `trials` uniform
/// coefficient vectors, evaluated over F_p. Deterministic in (seed, trials)
/// regardless of `jobs`; trials use independent RNG streams.
MaxRankReport max_rank_randomized(const MatrixSpace& s, std::size_t trials,
                                  std::uint64_t seed, const PrimeField& f,
                                  int jobs = 0);

/// One step of the rank-increment search: find a canonical generator Y with
/// Y·Ker(X) not contained in Im(X) and a small integer r with
/// rank(X + r·Y) > rank(X). Returns nothing when no generator qualifies.
std::optional<Matrix> rank_boost(const MatrixSpace& s, const Matrix& x);

/// Iterate rank_boost to a fixpoint. The result carries an exact-arithmetic
/// rank certificate; it is a lower bound on mrk(S), not always mrk itself.
Matrix max_rank_greedy(const MatrixSpace& s, const Matrix& start);

/// Greedy from the default start: the canonical basis element of largest
/// exact rank.
Matrix max_rank_greedy(const MatrixSpace& s);

} // namespace matslocc

#endif
