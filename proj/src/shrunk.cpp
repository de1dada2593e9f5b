#include "matslocc/shrunk.hpp"

#include "matslocc/compression.hpp"
#include "matslocc/errors.hpp"

namespace matslocc {

std::optional<ShrunkWitness> verify_shrunk(const MatrixSpace& s, const Subspace& u) {
    if (u.ambient != s.cols())
        throw AmbientMismatch("verify_shrunk: U lives in the wrong ambient space");
    std::vector<std::vector<GaussianRational>> images;
    for (const auto& e : s.canonical_basis())
        for (const auto& vec : u.basis) images.push_back(e.apply(vec));
    Subspace su = Subspace::from_vectors(s.rows(), std::move(images));
    if (su.dim() >= u.dim()) return std::nullopt;
    return ShrunkWitness{u, su};
}

ShrunkWitness canonical_shrunk_of_compression(std::size_t p, std::size_t q, std::size_t d) {
    if (p + q >= d) throw NotMaximalCompression("canonical witness requires p + q < d");
    MatrixSpace a = build_compression_space({p, q, d, d});
    std::vector<std::size_t> tail;
    for (std::size_t i = q; i < d; ++i) tail.push_back(i);
    Subspace u = Subspace::coordinate(d, tail);
    auto w = verify_shrunk(a, u);
    if (!w) throw Error("canonical compression witness failed to verify");
    return *w;
}

MatrixSpace blowup(const MatrixSpace& s, std::size_t k, std::size_t size_guard) {
    if (k < 1) throw InvalidParams("blowup: k must be >= 1");
    if (k == 1) return s;
    return tensor(s, full_space(k, k), size_guard);
}

ShrunkDecision has_shrunk_subspace(const MatrixSpace& s, std::size_t trials,
                                   std::uint64_t seed, const PrimeField& f,
                                   int jobs, std::size_t size_guard) {
    if (!s.is_square()) throw NonSquare("has_shrunk_subspace needs a square space");
    const std::size_t d = s.rows();
    ShrunkDecision out;
    out.failure_bound = Rational(0);
    std::size_t kmax = d > 1 ? d - 1 : 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        MatrixSpace bk = [&] {
            try {
                return blowup(s, k, size_guard);
            } catch (const SizeGuardExceeded&) {
                throw SizeGuardExceeded("has_shrunk_subspace: blow-up k=" + std::to_string(k) +
                                            " exceeds size guard",
                                        static_cast<long>(out.largest_k_tested));
            }
        }();
        MaxRankReport rep = max_rank_randomized(bk, trials, seed + k, f, jobs);
        out.largest_k_tested = k;
        if (rep.rank == k * d) {
            // Lift the witness and confirm exactly; the F_p rank is a lower
            // bound on the exact rank of the lifted element, so this
            // certificate is unconditional.
            std::size_t exact = rep.verify_exact(bk);
            if (exact != k * d)
                throw Error("blow-up certificate failed exact re-verification");
            out.shrunk = false;
            out.certificate = BlowupCertificate{k, std::move(rep), exact};
            out.failure_bound = Rational(0);
            return out;
        }
        out.failure_bound += rep.failure_bound;
    }
    out.shrunk = true;
    return out;
}

NcrkBounds ncrk_bounds(const MatrixSpace& s, const std::vector<Subspace>& witnesses,
                       std::size_t trials, std::uint64_t seed, const PrimeField& f,
                       int jobs, std::size_t size_guard) {
    if (!s.is_square()) throw NonSquare("ncrk_bounds needs a square space");
    const std::size_t d = s.rows();
    NcrkBounds out;

    std::size_t kmax = d > 1 ? d - 1 : 1;
    bool full_rank_certificate = false;
    for (std::size_t k = 1; k <= kmax; ++k) {
        MatrixSpace bk = blowup(s, k, size_guard);
        MaxRankReport rep = max_rank_randomized(bk, trials, seed + k, f, jobs);
        out.blowup_ranks.emplace_back(k, rep.rank);
        std::size_t lb = (rep.rank + k - 1) / k;
        out.lower = std::max(out.lower, lb);
        if (rep.rank == k * d) {
            full_rank_certificate = rep.verify_exact(bk) == k * d;
            break;  // ncrk is full; larger k cannot improve the bound
        }
    }

    std::size_t best_c = 0;
    for (const auto& u : witnesses) {
        auto w = verify_shrunk(s, u);
        if (w) best_c = std::max(best_c, w->shrinkage());
    }
    out.best_witness_shrinkage = best_c;
    out.upper = d - best_c;

    if (best_c > 0 && full_rank_certificate)
        throw InconsistentEvidence(
            "verified shrunk witness coexists with a verified full-rank blow-up certificate");
    if (out.lower > out.upper)
        throw InconsistentEvidence("ncrk lower bound exceeds witness upper bound");
    return out;
}

} // namespace matslocc
