#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "matslocc/compression.hpp"
#include "matslocc/slocc.hpp"

using namespace matslocc;

TEST_CASE("state validation") {
    TripartiteState bad = ghz_state();
    bad.amplitudes.push_back({0, 0, 0, GaussianRational(2)});  // duplicate triple
    CHECK_THROWS_AS(bad.validate(), InvalidParams);

    TripartiteState oob = ghz_state();
    oob.amplitudes.push_back({2, 0, 0, GaussianRational(1)});
    CHECK_THROWS_AS(oob.validate(), InvalidParams);

    TripartiteState zero = ghz_state();
    for (auto& a : zero.amplitudes) a.value = GaussianRational(0);
    CHECK_THROWS_AS(zero.validate(), InvalidParams);
}

TEST_CASE("vec_support slices by the C index") {
    MatrixSpace g = vec_support(ghz_state());
    CHECK(g.rows() == 2);
    CHECK(g.dim() == 2);
    CHECK(g.contains(Matrix::elementary(2, 2, 0, 0)));
    CHECK(g.contains(Matrix::elementary(2, 2, 1, 1)));
    CHECK_FALSE(g.contains(Matrix::elementary(2, 2, 0, 1)));

    MatrixSpace w = vec_support(w_state());
    CHECK(w.dim() == 2);
    CHECK(w.contains(Matrix::elementary(2, 2, 0, 1) + Matrix::elementary(2, 2, 1, 0)));

    // zero slices are dropped, not kept as zero generators
    TripartiteState padded = ghz_state();
    padded.dim_c = 5;
    CHECK(vec_support(padded).generators().size() == 2);

    // slices of the skew state are exactly the skew space
    MatrixSpace sk = vec_support(build_skew_state(3));
    CHECK(sk.basis_rref().rows == skew_space(3).basis_rref().rows);

    MatrixSpace cs = vec_support(compression_state(1, 1, 3));
    CHECK(cs.basis_rref().rows == build_compression_space({1, 1, 3}).basis_rref().rows);
}

TEST_CASE("skew construction") {
    CHECK_THROWS_AS(build_skew_state(4), EvenD);
    CHECK_THROWS_AS(build_skew_state(1), EvenD);
    TripartiteState s5 = build_skew_state(5);
    CHECK(s5.dim_c == 10);
    s5.validate();

    CHECK(rank_exact(skew_tensor_square_witness(3)) == 9);
    CHECK(rank_exact(skew_tensor_square_witness(5)) == 25);
    // the witness lies in the tensor square of the slice space
    CHECK(tensor_power(skew_space(3), 2).contains(skew_tensor_square_witness(3)));
}

TEST_CASE("msrk of the standard states") {
    PrimeField f(default_prime());
    CHECK(msrk(ghz_state(), 1, 16, 42, f).rank == 2);
    CHECK(msrk(w_state(), 1, 16, 42, f).rank == 2);
    CHECK(msrk(build_skew_state(3), 1, 16, 42, f).rank == 2);
    CHECK(msrk(build_skew_state(5), 1, 16, 42, f).rank == 4);
    CHECK(msrk(compression_state(1, 1, 3), 1, 16, 42, f).rank == 2);

    // strict supermultiplicativity shows up in the tensor square
    CHECK(msrk(build_skew_state(3), 2, 16, 42, f).rank == 9);
    CHECK(msrk(compression_state(1, 1, 3), 2, 24, 42, f).rank == 6);
    // GHZ stays multiplicative
    CHECK(msrk(ghz_state(), 2, 16, 42, f).rank == 4);
}

TEST_CASE("convertibility verdicts") {
    PrimeField f(default_prime());

    auto yes = can_convert(build_skew_state(3), 1, 2, 16, 42, f, /*certify=*/true);
    CHECK(yes.convertible);
    CHECK(yes.certified);
    CHECK(yes.max_copies_extractable == 1);

    auto no = can_convert(build_skew_state(3), 1, 3, 16, 42, f);
    CHECK_FALSE(no.convertible);
    CHECK(no.estimate.failure_bound > 0);

    // two copies reach rank 9: two rank-3 targets extractable
    auto sq = can_convert(build_skew_state(3), 2, 3, 16, 42, f, /*certify=*/true);
    CHECK(sq.convertible);
    CHECK(sq.max_copies_extractable == 2);

    auto ghz3 = can_convert(ghz_state(), 1, 3, 16, 42, f);
    CHECK_FALSE(ghz3.convertible);
    CHECK(ghz3.max_copies_extractable == 0);

    CHECK_THROWS_AS(can_convert(ghz_state(), 1, 0, 16, 42, f), InvalidParams);
}

TEST_CASE("strict supermultiplicativity test on fixtures") {
    PrimeField f(default_prime());
    auto run = [&](const TripartiteState& st) {
        return strictly_supermultiplicative(st, 16, 42, f);
    };

    CHECK(run(build_skew_state(3)).strict);
    CHECK(run(compression_state(1, 1, 3)).strict);
    CHECK_FALSE(run(ghz_state()).strict);
    CHECK_FALSE(run(w_state()).strict);

    // full slice space: mrk equals the image dimension
    TripartiteState full;
    full.dim_a = full.dim_b = 2;
    full.dim_c = 4;
    full.amplitudes = {{0, 0, 0, GaussianRational(1)},
                       {0, 1, 1, GaussianRational(1)},
                       {1, 0, 2, GaussianRational(1)},
                       {1, 1, 3, GaussianRational(1)}};
    CHECK_FALSE(run(full).strict);

    // product state |000>
    TripartiteState prod;
    prod.dim_a = prod.dim_b = prod.dim_c = 2;
    prod.amplitudes = {{0, 0, 0, GaussianRational(1)}};
    auto e = run(prod);
    CHECK_FALSE(e.strict);
    CHECK(e.mrk_estimate == 1);
}

TEST_CASE("asymptotic reachability") {
    PrimeField f(default_prime());
    auto sk = asymptotic_reachability(build_skew_state(3), 16, 42, f);
    CHECK(sk.reachable);
    REQUIRE(sk.decision.certificate.has_value());
    CHECK(sk.decision.certificate->k == 2);

    auto cs = asymptotic_reachability(compression_state(1, 1, 3), 16, 42, f);
    CHECK_FALSE(cs.reachable);

    TripartiteState rect;
    rect.dim_a = 2;
    rect.dim_b = 3;
    rect.dim_c = 1;
    rect.amplitudes = {{0, 0, 0, GaussianRational(1)}};
    CHECK_THROWS_AS(asymptotic_reachability(rect, 16, 42, f), NonSquare);
}

TEST_CASE("rate bounds") {
    PrimeField f(default_prime());

    // shrunk-free space: the rate is known exactly
    RateBounds sk = rate_bounds(build_skew_state(3), 2, 2, 16, 42, f);
    CHECK(sk.upper_kind == UpperBoundKind::ShrunkFree);
    CHECK(sk.exact);
    CHECK(sk.upper == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(sk.lower == doctest::Approx(std::log2(3.0)).epsilon(1e-9));

    // compression state without a witness: trivial log_r d cap
    RateBounds cs = rate_bounds(compression_state(1, 1, 3), 2, 3, 16, 42, f);
    CHECK(cs.upper_kind == UpperBoundKind::Trivial);
    CHECK(cs.upper == doctest::Approx(std::log2(3.0)));
    CHECK_FALSE(cs.exact);

    // with the verified witness the cap drops to log2(2*sqrt(2)) = 3/2
    ShrunkWitness w = canonical_shrunk_of_compression(1, 1, 3);
    RateBounds cw = rate_bounds(compression_state(1, 1, 3), 2, 3, 16, 42, f, w.u);
    CHECK(cw.upper_kind == UpperBoundKind::CompressionEmbedding);
    CHECK(cw.upper == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(cw.lower >= 1.0);
    CHECK(cw.lower <= cw.upper);
    CHECK(cw.lower == doctest::Approx(std::log2(6.0) / 2.0).epsilon(1e-9));

    CHECK_THROWS_AS(rate_bounds(ghz_state(), 1, 2, 16, 42, f), InvalidParams);
}
