#ifndef MATSLOCC_PRIME_FIELD_HPP
#define MATSLOCC_PRIME_FIELD_HPP

#include <cstdint>

#include "matslocc/scalar.hpp"

namespace matslocc {

using Fp = std::uint64_t;

/// Prime field F_p with p ≡ 1 (mod 4), carrying a square root of -1 so that
/// Gaussian rationals reduce into F_p without a field extension.
class PrimeField {
public:
    // Throws InvalidParams unless p is prime and p ≡ 1 (mod 4).
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t sqrt_minus_one() const { return root_; }

    Fp add(Fp a, Fp b) const { Fp s = a + b; return s >= p_ ? s - p_ : s; }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const { return (a * b) % p_; }  // p < 2^31, product fits
    Fp pow(Fp a, std::uint64_t e) const;
    Fp inv(Fp a) const;  // throws DomainError on 0

    // (re + r*im) mod p. Throws DenominatorDivisibleByP when a denominator
    // of x is divisible by p; the caller should retry with another prime.
    Fp reduce(const GaussianRational& x) const;
    Fp reduce(const Rational& x) const;
    Fp reduce(const Integer& x) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

private:
    std::uint64_t p_;
    std::uint64_t root_;
};

// Largest prime below 2^31 with p ≡ 1 (mod 4). Value: 2147483629.
std::uint64_t default_prime();

// Largest valid prime strictly below `below`, for retries after a
// DenominatorDivisibleByP.
std::uint64_t prev_valid_prime(std::uint64_t below);

bool is_prime_u64(std::uint64_t n);

} // namespace matslocc

#endif
