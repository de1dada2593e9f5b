#ifndef MATSLOCC_MATRIX_HPP
#define MATSLOCC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "matslocc/prime_field.hpp"
#include "matslocc/scalar.hpp"

namespace matslocc {

/// Dense m×n matrix of exact complex scalars. Dimensions are fixed at
/// construction; entries stay exact through every operation.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t d);
    /// |i><j| in M(rows × cols).
    static Matrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<GaussianRational>& data() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);  // matrix product
    friend Matrix operator*(const GaussianRational& c, const Matrix& a);

    /// Row-major flattening; the vec convention used throughout.
    std::vector<GaussianRational> vectorize() const { return data_; }
    static Matrix from_vector(std::size_t rows, std::size_t cols,
                              const std::vector<GaussianRational>& v);

    /// Matrix-vector product A·u.
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& u) const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

// ---- exact linear algebra over the Gaussian rationals ----

/// Reduced row echelon form of a list of row vectors. Zero rows are dropped;
/// the surviving rows are the canonical basis of the span.
struct Rref {
    std::vector<std::vector<GaussianRational>> rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return rows.size(); }
};

Rref rref(std::vector<std::vector<GaussianRational>> rows);

/// Coordinates of v in the span of an RREF basis, or nullopt-like failure.
/// Returns true and fills coords when v lies in the span.
bool coords_in_rref(const Rref& basis, const std::vector<GaussianRational>& v,
                    std::vector<GaussianRational>& coords);

std::size_t rank_exact(const Matrix& a);

/// Basis of the (right) null space of a.
std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& a);

/// RREF basis of the column span of a.
Rref column_space(const Matrix& a);

// ---- matrices over F_p ----

/// Dense matrix over a prime field; the workhorse behind every randomized
/// rank computation.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fp& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Fp at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static FpMatrix reduce(const Matrix& a, const PrimeField& f);

private:
    std::size_t rows_, cols_;
    std::vector<Fp> data_;
};

/// In-place elimination rank over F_p. OpenMP-parallel row updates; `jobs`
/// caps the thread count (0 = runtime default).
std::size_t rank_mod(FpMatrix a, const PrimeField& f, int jobs = 0);

/// Serial reference elimination, kept for testing the parallel kernel.
std::size_t rank_mod_serial(FpMatrix a, const PrimeField& f);

} // namespace matslocc

#endif
