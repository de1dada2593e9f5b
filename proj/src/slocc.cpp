#include "matslocc/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "matslocc/compression.hpp"
#include "matslocc/errors.hpp"

namespace matslocc {

void TripartiteState::validate() const {
    if (dim_a == 0 || dim_b == 0 || dim_c == 0)
        throw InvalidParams("state: zero-dimensional subsystem");
    if (amplitudes.empty()) throw InvalidParams("state: needs at least one nonzero amplitude");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    bool any_nonzero = false;
    for (const auto& amp : amplitudes) {
        if (amp.a >= dim_a || amp.b >= dim_b || amp.c >= dim_c)
            throw InvalidParams("state: amplitude index out of range");
        if (!seen.insert({amp.a, amp.b, amp.c}).second)
            throw InvalidParams("state: duplicate index triple");
        any_nonzero = any_nonzero || !amp.value.is_zero();
    }
    if (!any_nonzero) throw InvalidParams("state: all amplitudes are zero");
}

MatrixSpace vec_support(const TripartiteState& state) {
    state.validate();
    std::vector<Matrix> slices;
    for (std::size_t k = 0; k < state.dim_c; ++k) slices.emplace_back(state.dim_a, state.dim_b);
    for (const auto& amp : state.amplitudes) slices[amp.c].at(amp.a, amp.b) = amp.value;
    std::vector<Matrix> nonzero;
    for (auto& s : slices)
        if (!s.is_zero()) nonzero.push_back(std::move(s));
    return MatrixSpace(state.dim_a, state.dim_b, std::move(nonzero));
}

MaxRankReport msrk(const TripartiteState& state, std::size_t copies, std::size_t trials,
                   std::uint64_t seed, const PrimeField& f, int jobs,
                   std::size_t size_guard) {
    MatrixSpace s = tensor_power(vec_support(state), copies, size_guard);
    return max_rank_randomized(s, trials, seed, f, jobs);
}

ConvertibilityVerdict can_convert(const TripartiteState& state, std::size_t copies,
                                  std::size_t target_srk, std::size_t trials,
                                  std::uint64_t seed, const PrimeField& f, bool certify,
                                  int jobs, std::size_t size_guard) {
    if (target_srk < 1) throw InvalidParams("can_convert: target Schmidt rank must be >= 1");
    MatrixSpace s = tensor_power(vec_support(state), copies, size_guard);
    ConvertibilityVerdict v;
    v.copies = copies;
    v.target_srk = target_srk;
    v.estimate = max_rank_randomized(s, trials, seed, f, jobs);
    std::size_t rank = v.estimate.rank;
    if (certify) {
        v.certified = v.estimate.verify_exact(s) >= rank;
        if (!v.certified) throw Error("witness certification failed");
    }
    v.convertible = rank >= target_srk;
    // m = floor(log_target rank) by exact integer comparison.
    std::size_t m = 0;
    if (target_srk > 1) {
        Integer pw(static_cast<unsigned long>(target_srk));
        while (pw <= Integer(static_cast<unsigned long>(rank))) {
            ++m;
            pw *= static_cast<unsigned long>(target_srk);
        }
    }
    v.max_copies_extractable = m;
    return v;
}

SupermultiplicativityEvidence strictly_supermultiplicative(
    const TripartiteState& state, std::size_t trials, std::uint64_t seed,
    const PrimeField& f, int jobs) {
    MatrixSpace s = vec_support(state);
    SupermultiplicativityEvidence e;
    e.mrk_estimate = max_rank_randomized(s, trials, seed, f, jobs).rank;
    e.image_dim = image(s).dim();
    e.kernel_dim = kernel(s).dim();
    e.col_dim = s.cols();
    e.rectangular_rows_exceed_cols = s.rows() > s.cols();
    e.strict = e.mrk_estimate < e.image_dim && e.mrk_estimate < e.col_dim - e.kernel_dim;
    return e;
}

ReachabilityResult asymptotic_reachability(const TripartiteState& state, std::size_t trials,
                                           std::uint64_t seed, const PrimeField& f,
                                           int jobs, std::size_t size_guard) {
    if (state.dim_a != state.dim_b)
        throw NonSquare("asymptotic_reachability: requires dim_a == dim_b");
    ReachabilityResult out;
    out.decision = has_shrunk_subspace(vec_support(state), trials, seed, f, jobs, size_guard);
    out.reachable = !out.decision.shrunk;
    return out;
}

RateBounds rate_bounds(const TripartiteState& state, std::size_t target_srk,
                       std::size_t max_copies, std::size_t trials, std::uint64_t seed,
                       const PrimeField& f, const std::optional<Subspace>& witness,
                       int jobs, std::size_t size_guard) {
    if (target_srk < 2) throw InvalidParams("rate_bounds: target Schmidt rank must be >= 2");
    MatrixSpace s = vec_support(state);
    const double log_r = std::log2(static_cast<double>(target_srk));
    const std::size_t d = std::min(s.rows(), s.cols());

    RateBounds out;
    out.target_srk = target_srk;
    for (std::size_t n = 1; n <= max_copies; ++n) {
        std::size_t r = 0;
        try {
            MatrixSpace sn = tensor_power(s, n, size_guard);
            r = max_rank_randomized(sn, trials, seed + n, f, jobs).rank;
        } catch (const SizeGuardExceeded&) {
            break;  // larger powers only get bigger
        }
        if (r > 0)
            out.lower = std::max(out.lower,
                                 std::log2(static_cast<double>(r)) / (log_r * static_cast<double>(n)));
    }

    out.upper = std::log2(static_cast<double>(d)) / log_r;
    out.upper_kind = UpperBoundKind::Trivial;

    if (s.is_square()) {
        ShrunkDecision dec = has_shrunk_subspace(s, trials, seed, f, jobs, size_guard);
        if (!dec.shrunk) {
            out.upper_kind = UpperBoundKind::ShrunkFree;  // msrk∞ = d exactly
        } else if (witness) {
            auto w = verify_shrunk(s, *witness);
            if (w) {
                std::size_t p = w->su.dim();
                std::size_t q = s.rows() - w->u.dim();
                if (p >= 1 && q >= 1 && p + q < s.rows()) {
                    double bound = std::log2(asymptotic_profile(p, q, s.rows()).mrk_infinity) / log_r;
                    if (bound < out.upper) {
                        out.upper = bound;
                        out.upper_kind = UpperBoundKind::CompressionEmbedding;
                    }
                }
            }
        }
    }
    out.exact = std::abs(out.upper - out.lower) < 1e-9;
    return out;
}

TripartiteState build_skew_state(std::size_t d) {
    if (d < 3 || d % 2 == 0) throw EvenD("skew state requires odd d >= 3");
    TripartiteState st;
    st.dim_a = d;
    st.dim_b = d;
    st.dim_c = d * (d - 1) / 2;
    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            st.amplitudes.push_back({i, j, pair_index, GaussianRational(1)});
            st.amplitudes.push_back({j, i, pair_index, GaussianRational(-1)});
            ++pair_index;
        }
    return st;
}

Matrix skew_tensor_square_witness(std::size_t d) {
    if (d < 3 || d % 2 == 0) throw EvenD("skew witness requires odd d >= 3");
    Matrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Matrix e = Matrix::elementary(d, d, i, j) - Matrix::elementary(d, d, j, i);
            p = p + kronecker(e, e);
        }
    return p;
}

TripartiteState ghz_state() {
    TripartiteState st;
    st.dim_a = st.dim_b = st.dim_c = 2;
    st.amplitudes = {{0, 0, 0, GaussianRational(1)}, {1, 1, 1, GaussianRational(1)}};
    return st;
}

TripartiteState w_state() {
    TripartiteState st;
    st.dim_a = st.dim_b = st.dim_c = 2;
    st.amplitudes = {{0, 0, 1, GaussianRational(1)},
                     {0, 1, 0, GaussianRational(1)},
                     {1, 0, 0, GaussianRational(1)}};
    return st;
}

TripartiteState compression_state(std::size_t p, std::size_t q, std::size_t d) {
    MatrixSpace a = build_compression_space({p, q, d});
    TripartiteState st;
    st.dim_a = st.dim_b = d;
    st.dim_c = a.generators().size();
    std::size_t k = 0;
    for (const auto& g : a.generators()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!g.at(i, j).is_zero()) st.amplitudes.push_back({i, j, k, g.at(i, j)});
        ++k;
    }
    return st;
}

} // namespace matslocc
