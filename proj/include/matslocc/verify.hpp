#ifndef MATSLOCC_VERIFY_HPP
#define MATSLOCC_VERIFY_HPP

#include <cstdint>

#include "matslocc/json_io.hpp"

namespace matslocc {

/// Shared run configuration; identical config + inputs gives byte-identical
/// JSON output everywhere.
struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 16;
    std::uint64_t prime = 0;  // 0 = default_prime()
    std::size_t size_guard = kDefaultSizeGuard;
    bool certify = false;
    int jobs = 0;

    PrimeField field() const { return PrimeField(prime ? prime : default_prime()); }
};

/// Machine-readable pass/fail report for one of the built-in check suites:
/// "paper-values", "formulas-vs-oracle", "invariants".
Json run_verify_suite(const std::string& suite, const RunConfig& cfg);

} // namespace matslocc

#endif
