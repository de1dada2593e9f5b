#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matslocc/matrix.hpp"

namespace matslocc {

namespace {

// Row-reduce in place and count pivots. The eliminate callback runs the row
// updates below the pivot; serial and parallel ranks share everything else.
template <typename Eliminate>
std::size_t rank_elim(FpMatrix& a, const PrimeField& f, Eliminate eliminate) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a.at(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(r, j), a.at(piv, j));
        eliminate(a, r, col);
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_mod_serial(FpMatrix a, const PrimeField& f) {
    return rank_elim(a, f, [&f](FpMatrix& m, std::size_t r, std::size_t col) {
        const std::size_t nrows = m.rows(), ncols = m.cols();
        Fp pivinv = f.inv(m.at(r, col));
        for (std::size_t i = r + 1; i < nrows; ++i) {
            Fp v = m.at(i, col);
            if (v == 0) continue;
            Fp factor = f.mul(v, pivinv);
            m.at(i, col) = 0;
            for (std::size_t j = col + 1; j < ncols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
    });
}

std::size_t rank_mod(FpMatrix a, const PrimeField& f, int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return rank_mod_serial(std::move(a), f);
#else
    const std::size_t m = a.rows(), n = a.cols();
    // Small eliminations are cheaper serial than forking a team.
    if (m * n < 64 * 64) return rank_mod_serial(std::move(a), f);
    int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
    std::size_t rank = 0;
    rank = rank_elim(a, f, [&](FpMatrix& mat, std::size_t r, std::size_t col) {
        const std::size_t nrows = mat.rows(), ncols = mat.cols();
        Fp pivinv = f.inv(mat.at(r, col));
#pragma omp parallel for schedule(static) num_threads(nthreads)
        for (std::size_t i = r + 1; i < nrows; ++i) {
            Fp v = mat.at(i, col);
            if (v == 0) continue;
            Fp factor = f.mul(v, pivinv);
            mat.at(i, col) = 0;
            for (std::size_t j = col + 1; j < ncols; ++j)
                mat.at(i, j) = f.sub(mat.at(i, j), f.mul(factor, mat.at(r, j)));
        }
    });
    return rank;
#endif
}

} // namespace matslocc
