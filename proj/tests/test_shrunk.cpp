#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matslocc/compression.hpp"
#include "matslocc/shrunk.hpp"

using namespace matslocc;

TEST_CASE("canonical compression witness verifies") {
    // A(1,1,3) shrinks span{e1,e2} into span{e0}
    ShrunkWitness w = canonical_shrunk_of_compression(1, 1, 3);
    CHECK(w.u.dim() == 2);
    CHECK(w.su.dim() == 1);
    CHECK(w.shrinkage() == 1);

    MatrixSpace a113 = build_compression_space({1, 1, 3});
    auto checked = verify_shrunk(a113, w.u);
    REQUIRE(checked.has_value());
    CHECK(checked->su == w.su);

    // the same subspace is not shrunk by the identity span
    CHECK_FALSE(verify_shrunk(span_identity(3), w.u).has_value());
    // nor by the full space, which maps any nonzero U onto everything
    CHECK_FALSE(verify_shrunk(full_space(3, 3), w.u).has_value());
}

TEST_CASE("canonical witness across parameter range") {
    for (std::size_t d = 3; d <= 6; ++d)
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; q <= 2; ++q) {
                if (p + q >= d) continue;
                ShrunkWitness w = canonical_shrunk_of_compression(p, q, d);
                CHECK(w.u.dim() == d - q);
                CHECK(w.su.dim() == p);
                if (w.shrinkage() > 0) {
                    auto checked = verify_shrunk(build_compression_space({p, q, d}), w.u);
                    REQUIRE(checked.has_value());
                    CHECK(checked->shrinkage() == w.shrinkage());
                }
            }
}

TEST_CASE("derived witness for the tensor square of A(1,1,3)") {
    // U = span{e_(j,k) : (j,k) != (0,0)} loses three dimensions
    MatrixSpace sq = tensor_power(build_compression_space({1, 1, 3}), 2);
    std::vector<std::size_t> idx;
    for (std::size_t t = 1; t < 9; ++t) idx.push_back(t);
    auto checked = verify_shrunk(sq, Subspace::coordinate(9, idx));
    REQUIRE(checked.has_value());
    CHECK(checked->u.dim() == 8);
    CHECK(checked->su.dim() == 5);
    CHECK(checked->shrinkage() == 3);
}

TEST_CASE("blowup shapes") {
    MatrixSpace sk = skew_space(3);
    MatrixSpace b2 = blowup(sk, 2);
    CHECK(b2.rows() == 6);
    CHECK(b2.cols() == 6);
    CHECK(b2.dim() == 3 * 4);
    CHECK(blowup(sk, 1).dim() == sk.dim());
    CHECK_THROWS_AS(blowup(sk, 4, 100), SizeGuardExceeded);
}

TEST_CASE("shrunk decision: skew(3) has none, certificate at k=2") {
    PrimeField f(default_prime());
    ShrunkDecision d = has_shrunk_subspace(skew_space(3), 16, 42, f);
    CHECK_FALSE(d.shrunk);
    REQUIRE(d.certificate.has_value());
    CHECK(d.certificate->k == 2);
    CHECK(d.certificate->exact_rank == 6);
    CHECK(d.failure_bound == 0);
}

TEST_CASE("shrunk decision: identity span is full rank at k=1") {
    PrimeField f(default_prime());
    ShrunkDecision d = has_shrunk_subspace(span_identity(4), 4, 1, f);
    CHECK_FALSE(d.shrunk);
    REQUIRE(d.certificate.has_value());
    CHECK(d.certificate->k == 1);
    CHECK(d.certificate->exact_rank == 4);
}

TEST_CASE("shrunk decision: compression spaces are shrunk") {
    PrimeField f(default_prime());
    ShrunkDecision d = has_shrunk_subspace(build_compression_space({1, 1, 3}), 16, 42, f);
    CHECK(d.shrunk);
    CHECK_FALSE(d.certificate.has_value());
    CHECK(d.largest_k_tested == 2);
    CHECK(d.failure_bound > 0);
    CHECK(d.failure_bound < 1);
}

TEST_CASE("shrunk decision reports progress when the guard trips") {
    PrimeField f(default_prime());
    try {
        has_shrunk_subspace(skew_space(3), 4, 1, f, 0, /*size_guard=*/30);
        FAIL("expected SizeGuardExceeded");
    } catch (const SizeGuardExceeded& e) {
        CHECK(e.largest_k_tested == 1);
    }
}

TEST_CASE("ncrk bounds on fixtures") {
    PrimeField f(default_prime());

    // skew(3): the k=2 blow-up certificate pins ncrk at 3
    NcrkBounds sk = ncrk_bounds(skew_space(3), {}, 16, 42, f);
    CHECK(sk.lower == 3);
    CHECK(sk.upper == 3);

    // A(1,1,3): witness closes the gap at 2
    ShrunkWitness w = canonical_shrunk_of_compression(1, 1, 3);
    NcrkBounds a = ncrk_bounds(build_compression_space({1, 1, 3}), {w.u}, 16, 42, f);
    CHECK(a.lower == 2);
    CHECK(a.upper == 2);
    CHECK(a.best_witness_shrinkage == 1);

    // a witness that fails verification is ignored, not fatal
    Subspace bogus = Subspace::coordinate(3, {0});
    NcrkBounds b = ncrk_bounds(build_compression_space({1, 1, 3}), {bogus, w.u}, 16, 42, f);
    CHECK(b.upper == 2);
}

TEST_CASE("ncrk sandwich mrk <= ncrk-bounds <= 2 mrk") {
    PrimeField f(default_prime());
    struct Fixture {
        MatrixSpace s;
        std::size_t mrk;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({span_identity(3), 3});
    fixtures.push_back({skew_space(3), 2});
    fixtures.push_back({skew_space(5), 4});
    fixtures.push_back({build_compression_space({1, 1, 3}), 2});
    fixtures.push_back({build_compression_space({1, 2, 4}), 3});
    for (const auto& fx : fixtures) {
        NcrkBounds nb = ncrk_bounds(fx.s, {}, 16, 42, f);
        CHECK(nb.lower >= fx.mrk);
        CHECK(nb.lower <= nb.upper);
        CHECK(nb.lower <= 2 * fx.mrk);
    }
}
