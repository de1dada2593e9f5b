#ifndef MATSLOCC_COMPRESSION_HPP
#define MATSLOCC_COMPRESSION_HPP

#include <cstddef>
#include <utility>

#include "matslocc/matrix_space.hpp"

namespace matslocc {

/// Parameters of A(p,q,m,n): the span of elementary matrices touching the
/// first p rows or the first q columns. Square case has m == n == d.
struct CompressionParams {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t m = 0;
    std::size_t n = 0;

    CompressionParams(std::size_t p_, std::size_t q_, std::size_t d)
        : p(p_), q(q_), m(d), n(d) {}
    CompressionParams(std::size_t p_, std::size_t q_, std::size_t m_, std::size_t n_)
        : p(p_), q(q_), m(m_), n(n_) {}

    bool is_maximal_compression() const { return p + q < std::min(m, n); }
    bool is_square() const { return m == n; }
};

MatrixSpace build_compression_space(const CompressionParams& params);

/// mrk(A1 ⊗ A2) in closed form; both spaces must be maximal-compression.
Integer mrk_tensor_pair(const CompressionParams& a1, const CompressionParams& a2);

/// mrk(A(p,q,d)^{⊗ copies}) in closed form, exact integer arithmetic.
/// copies = 1 gives p+q.
Integer mrk_tensor_power(std::size_t p, std::size_t q, std::size_t d, std::size_t copies);

/// Binary relative entropy in bits; D(a||b) >= 0 with equality iff a == b.
double kl_divergence(double a, double b);

/// Everything the asymptotic rank formula needs, plus the value itself.
struct AsymptoticProfile {
    std::size_t p = 0, q = 0, d = 0;
    Rational p_prime, q_prime;          // p/d, q/d
    double lambda = 0;                  // log2((d-p)/q)
    double mu = 0;                      // log2((d-q)/p)
    double alpha = 0;                   // mu / (lambda + mu)
    double div_pm = 0;                  // D(1-alpha || p')
    double div_qm = 0;                  // D(alpha || q')
    double mrk_infinity = 0;            // d * max(2^-div_pm, 2^-div_qm)
};

/// Requires 1 <= p, q and p + q < d; p == 0 or q == 0 has no closed form
/// here and raises ZeroPQ.
AsymptoticProfile asymptotic_profile(std::size_t p, std::size_t q, std::size_t d);

/// Exponential sandwich on the binomial lower tail sum_{k<=Nprime} C(N,k)
/// prob^k (1-prob)^{N-k}; requires Nprime < N*prob.
std::pair<double, double> binomial_tail_bounds(std::size_t n, std::size_t nprime, double prob);

/// Exact lower-tail probability by rational summation; the test oracle for
/// the sandwich above. prob is taken as an exact rational.
Rational binomial_tail_exact(std::size_t n, std::size_t nprime, const Rational& prob);

} // namespace matslocc

#endif
