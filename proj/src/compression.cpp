#include "matslocc/compression.hpp"

#include <cmath>

#include "matslocc/errors.hpp"

namespace matslocc {

namespace {

Integer ipow(std::size_t base, std::size_t e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return out;  // 0^0 = 1, which the rank formula relies on
}

Integer binom(std::size_t n, std::size_t k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

} // namespace

MatrixSpace build_compression_space(const CompressionParams& params) {
    if (params.m == 0 || params.n == 0) throw InvalidParams("A(p,q,m,n): zero-sized matrix");
    if (params.p > params.m || params.q > params.n)
        throw InvalidParams("A(p,q,m,n): p must be <= m and q <= n");
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < params.p; ++i)
        for (std::size_t j = 0; j < params.n; ++j)
            gens.push_back(Matrix::elementary(params.m, params.n, i, j));
    for (std::size_t i = params.p; i < params.m; ++i)
        for (std::size_t j = 0; j < params.q; ++j)
            gens.push_back(Matrix::elementary(params.m, params.n, i, j));
    if (gens.empty()) gens.push_back(Matrix(params.m, params.n));  // zero space
    return MatrixSpace(params.m, params.n, std::move(gens));
}

Integer mrk_tensor_pair(const CompressionParams& a1, const CompressionParams& a2) {
    if (!a1.is_maximal_compression() || !a2.is_maximal_compression())
        throw NotMaximalCompression("mrk_tensor_pair needs maximal-compression factors");
    Integer p1(static_cast<unsigned long>(a1.p)), q1(static_cast<unsigned long>(a1.q));
    Integer p2(static_cast<unsigned long>(a2.p)), q2(static_cast<unsigned long>(a2.q));
    Integer m1(static_cast<unsigned long>(a1.m)), n1(static_cast<unsigned long>(a1.n));
    Integer m2(static_cast<unsigned long>(a2.m)), n2(static_cast<unsigned long>(a2.n));
    Integer t1 = p1 * p2;
    Integer t2 = std::min(Integer((n1 - q1) * q2), Integer(p1 * (m2 - p2)));
    Integer t3 = std::min(Integer((m1 - p1) * p2), Integer(q1 * (n2 - q2)));
    Integer t4 = q1 * q2;
    return t1 + t2 + t3 + t4;
}

Integer mrk_tensor_power(std::size_t p, std::size_t q, std::size_t d, std::size_t copies) {
    if (copies < 1) throw InvalidParams("mrk_tensor_power: copies must be >= 1");
    if (p + q >= d) throw NotMaximalCompression("mrk_tensor_power requires p + q < d");
    const std::size_t N = copies - 1;
    Integer total(0);
    for (std::size_t k = 0; k <= N; ++k) {
        Integer first = std::min(ipow(p, N - k + 1) * ipow(d - p, k),
                                 ipow(q, k) * ipow(d - q, N - k + 1));
        Integer second = std::min(ipow(q, k + 1) * ipow(d - q, N - k),
                                  ipow(p, N - k) * ipow(d - p, k + 1));
        total += binom(N, k) * (first + second);
    }
    return total;
}

double kl_divergence(double a, double b) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
        throw DomainError("kl_divergence: arguments must lie in (0,1)");
    return a * std::log2(a / b) + (1.0 - a) * std::log2((1.0 - a) / (1.0 - b));
}

AsymptoticProfile asymptotic_profile(std::size_t p, std::size_t q, std::size_t d) {
    if (p + q >= d) throw NotMaximalCompression("asymptotic_profile requires p + q < d");
    if (p == 0 || q == 0)
        throw ZeroPQ("asymptotic_profile: the formula is undefined for p = 0 or q = 0");
    AsymptoticProfile out;
    out.p = p; out.q = q; out.d = d;
    out.p_prime = Rational(static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    out.q_prime = Rational(static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    out.p_prime.canonicalize();
    out.q_prime.canonicalize();
    out.lambda = std::log2(static_cast<double>(d - p) / static_cast<double>(q));
    out.mu = std::log2(static_cast<double>(d - q) / static_cast<double>(p));
    out.alpha = out.mu / (out.lambda + out.mu);
    double pp = out.p_prime.get_d();
    double qp = out.q_prime.get_d();
    out.div_pm = kl_divergence(1.0 - out.alpha, pp);
    out.div_qm = kl_divergence(out.alpha, qp);
    out.mrk_infinity =
        static_cast<double>(d) * std::max(std::exp2(-out.div_pm), std::exp2(-out.div_qm));
    return out;
}

std::pair<double, double> binomial_tail_bounds(std::size_t n, std::size_t nprime, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw DomainError("binomial_tail_bounds: prob outside (0,1)");
    if (!(static_cast<double>(nprime) < static_cast<double>(n) * prob))
        throw DomainError("binomial_tail_bounds: requires N' < N*prob");
    double ratio = static_cast<double>(nprime) / static_cast<double>(n);
    double exponent = -static_cast<double>(n) * kl_divergence(ratio, prob);
    double upper = std::exp2(exponent);
    double lower = upper / std::sqrt(2.0 * static_cast<double>(n));
    return {lower, upper};
}

Rational binomial_tail_exact(std::size_t n, std::size_t nprime, const Rational& prob) {
    Rational one_minus = Rational(1) - prob;
    Rational total(0);
    for (std::size_t k = 0; k <= nprime; ++k) {
        Rational term(binom(n, k));
        for (std::size_t i = 0; i < k; ++i) term *= prob;
        for (std::size_t i = 0; i < n - k; ++i) term *= one_minus;
        total += term;
    }
    return total;
}

} // namespace matslocc
