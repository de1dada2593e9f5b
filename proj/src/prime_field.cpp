#include "matslocc/prime_field.hpp"

#include "matslocc/errors.hpp"

namespace matslocc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; the listed bases are exact for all n < 3.3e24.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), root_(0) {
    if (p >= (1ULL << 32)) throw InvalidParams("prime must fit in 32 bits");
    if (!is_prime_u64(p)) throw InvalidParams("modulus " + std::to_string(p) + " is not prime");
    if (p % 4 != 1) throw InvalidParams("prime " + std::to_string(p) + " is not 1 mod 4");
    // Smallest quadratic non-residue g, then r = g^((p-1)/4).
    std::uint64_t g = 2;
    while (powmod_u64(g, (p - 1) / 2, p) != p - 1) ++g;
    root_ = powmod_u64(g, (p - 1) / 4, p);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const { return powmod_u64(a, e, p_); }

Fp PrimeField::inv(Fp a) const {
    a %= p_;
    if (a == 0) throw DomainError("inverse of zero in F_p");
    return powmod_u64(a, p_ - 2, p_);
}

Fp PrimeField::reduce(const Integer& x) const {
    Integer m = x % Integer(static_cast<unsigned long>(p_));
    if (m < 0) m += Integer(static_cast<unsigned long>(p_));
    return m.get_ui();
}

Fp PrimeField::reduce(const Rational& x) const {
    Integer den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw DenominatorDivisibleByP("denominator divisible by p = " + std::to_string(p_));
    return mul(reduce(x.get_num()), inv(reduce(den)));
}

Fp PrimeField::reduce(const GaussianRational& x) const {
    return add(reduce(x.re), mul(root_, reduce(x.im)));
}

std::uint64_t prev_valid_prime(std::uint64_t below) {
    for (std::uint64_t p = below - 1; p > 4; --p)
        if (p % 4 == 1 && is_prime_u64(p)) return p;
    throw InvalidParams("no valid prime below " + std::to_string(below));
}

std::uint64_t default_prime() {
    static const std::uint64_t p = prev_valid_prime(1ULL << 31);
    return p;
}

} // namespace matslocc
