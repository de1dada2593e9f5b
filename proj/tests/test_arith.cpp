#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matslocc/prime_field.hpp"
#include "matslocc/rng.hpp"
#include "matslocc/scalar.hpp"

using namespace matslocc;

namespace {

GaussianRational random_scalar(RngStream& rng) {
    auto part = [&rng] {
        long num = static_cast<long>(rng.uniform_below(201)) - 100;
        long den = static_cast<long>(rng.uniform_below(20)) + 1;
        Rational r(num, den);
        r.canonicalize();
        return r;
    };
    return {part(), part()};
}

} // namespace

TEST_CASE("default prime is the largest 1-mod-4 prime below 2^31") {
    CHECK(default_prime() == 2147483629ULL);
    CHECK(default_prime() % 4 == 1);
    CHECK(is_prime_u64(default_prime()));
    // nothing valid between it and 2^31
    for (std::uint64_t p = default_prime() + 1; p < (1ULL << 31); ++p) {
        bool valid = p % 4 == 1 && is_prime_u64(p);
        CHECK_FALSE(valid);
    }
}

TEST_CASE("sqrt of -1 squares to -1") {
    for (std::uint64_t p : {std::uint64_t(13), std::uint64_t(29), std::uint64_t(1000033),
                            default_prime()}) {
        PrimeField f(p);
        std::uint64_t r = f.sqrt_minus_one();
        CHECK(f.mul(r, r) == p - 1);
    }
    CHECK_THROWS_AS(PrimeField(7), InvalidParams);   // 3 mod 4
    CHECK_THROWS_AS(PrimeField(21), InvalidParams);  // composite
}

TEST_CASE("reduce_mod examples") {
    PrimeField f13(13);
    CHECK(f13.reduce(GaussianRational(0)) == 0);
    // i maps to the stored root; the defining relation r^2 = -1 is what the
    // spec of the reduction forces.
    Fp ri = f13.reduce(gr_i());
    CHECK(ri == f13.sqrt_minus_one());
    CHECK(f13.mul(ri, ri) == 12);
    CHECK(f13.reduce(GaussianRational(Rational(1, 2))) == 7);  // 2*7 = 14 = 1 mod 13
    CHECK_THROWS_AS(f13.reduce(GaussianRational(Rational(1, 13))), DenominatorDivisibleByP);
    CHECK_THROWS_AS(f13.reduce(GaussianRational(Rational(1, 26))), DenominatorDivisibleByP);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
    PrimeField f(1000033);
    RngStream rng(99, 0);
    for (int it = 0; it < 200; ++it) {
        GaussianRational x = random_scalar(rng), y = random_scalar(rng);
        CHECK(f.reduce(x + y) == f.add(f.reduce(x), f.reduce(y)));
        CHECK(f.reduce(x * y) == f.mul(f.reduce(x), f.reduce(y)));
    }
}

TEST_CASE("field axioms hold exactly for GaussianRational") {
    RngStream rng(7, 0);
    for (int it = 0; it < 100; ++it) {
        GaussianRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == GaussianRational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("scalar text format round trips") {
    CHECK(format_scalar(parse_scalar("3/4")) == "3/4");
    CHECK(format_scalar(parse_scalar("-3/4+1/2*i")) == "-3/4+1/2*i");
    CHECK(format_scalar(parse_scalar("1/2-2/3*i")) == "1/2-2/3*i");
    CHECK(parse_scalar("i") == gr_i());
    CHECK(parse_scalar("-i") == -gr_i());
    CHECK(parse_scalar("0/5") == GaussianRational(0));
    CHECK(parse_scalar("2/4") == GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);

    RngStream rng(3, 0);
    for (int it = 0; it < 200; ++it) {
        GaussianRational x = random_scalar(rng);
        CHECK(parse_scalar(format_scalar(x)) == x);
    }
}

TEST_CASE("rng streams are deterministic and bounded") {
    RngStream a(12345, 0), b(12345, 0), c(12345, 1);
    // golden first draw, frozen from the chosen generator
    std::uint64_t first = a.next_u64();
    CHECK(first == b.next_u64());
    CHECK(first != c.next_u64());

    PrimeField f(default_prime());
    RngStream s(42, 0);
    for (int it = 0; it < 1000; ++it) CHECK(s.uniform_below(f.modulus()) < f.modulus());
}

TEST_CASE("rng golden value") {
    RngStream s(42, 0);
    // frozen at build time; any change to the stream construction must be deliberate
    CHECK(s.next_u64() == 6209409932949027529ULL);
}
