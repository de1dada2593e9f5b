// Timing harness for the parallel prime-field kernels against their serial
// references. Usage: bench_rank [max-size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "matslocc/matrix.hpp"
#include "matslocc/rank.hpp"
#include "matslocc/rng.hpp"

using namespace matslocc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FpMatrix random_fp_matrix(std::size_t n, const PrimeField& f, std::uint64_t seed) {
    RngStream rng(seed, 0);
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.uniform_below(f.modulus());
    return m;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1024;
    PrimeField f(default_prime());

    std::printf("%-24s %12s %12s %8s\n", "kernel", "serial (s)", "parallel (s)", "speedup");

    for (std::size_t n = 256; n <= max_n; n *= 2) {
        FpMatrix m = random_fp_matrix(n, f, 7);

        auto t0 = std::chrono::steady_clock::now();
        std::size_t rs = rank_mod_serial(m, f);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::size_t rp = rank_mod(m, f);
        double tp = seconds_since(t0);

        if (rs != rp) {
            std::fprintf(stderr, "rank mismatch at n=%zu: %zu vs %zu\n", n, rs, rp);
            return 1;
        }
        char label[32];
        std::snprintf(label, sizeof(label), "rank_mod %zux%zu", n, n);
        std::printf("%-24s %12.4f %12.4f %7.2fx\n", label, ts, tp, ts / tp);
    }

    // Randomized trials on a tensor-power space: jobs=1 vs default team.
    MatrixSpace s = tensor_power(skew_space(5), 2);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = max_rank_randomized(s, 64, 42, f, 1);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = max_rank_randomized(s, 64, 42, f, 0);
    double tp = seconds_since(t0);
    if (serial.rank != parallel.rank || serial.witness_coeffs != parallel.witness_coeffs) {
        std::fprintf(stderr, "trial determinism violated\n");
        return 1;
    }
    std::printf("%-24s %12.4f %12.4f %7.2fx\n", "trials skew(5)^2 x64", ts, tp, ts / tp);
    return 0;
}
