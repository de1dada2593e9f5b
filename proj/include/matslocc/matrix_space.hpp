#ifndef MATSLOCC_MATRIX_SPACE_HPP
#define MATSLOCC_MATRIX_SPACE_HPP

#include <cstddef>
#include <vector>

#include "matslocc/matrix.hpp"

namespace matslocc {

/// A subspace of coordinate space, stored as an RREF basis.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<std::vector<GaussianRational>> basis;

    std::size_t dim() const { return basis.size(); }

    static Subspace from_vectors(std::size_t ambient,
                                 std::vector<std::vector<GaussianRational>> vectors);
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    bool contains(const std::vector<GaussianRational>& v) const;
    bool operator==(const Subspace& other) const;
};

// Default cap on rows*cols of any matrix we materialize.
inline constexpr std::size_t kDefaultSizeGuard = std::size_t(1) << 22;

/// Span of m×n matrices, with its canonical (RREF of vectorized generators)
/// basis computed eagerly at construction.
class MatrixSpace {
public:
    MatrixSpace(std::size_t rows, std::size_t cols, std::vector<Matrix> generators);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& generators() const { return generators_; }
    const std::vector<Matrix>& canonical_basis() const { return basis_; }
    /// RREF of the vectorized generators, for membership tests.
    const Rref& basis_rref() const { return basis_rref_; }

    bool is_square() const { return rows_ == cols_; }

    /// Σ coeffs[i] · basis[i]; |coeffs| must equal dim().
    Matrix evaluate(const std::vector<GaussianRational>& coeffs) const;

    /// True iff x lies in the span; fills coords w.r.t. the canonical basis.
    bool contains(const Matrix& x, std::vector<GaussianRational>* coords = nullptr) const;

private:
    std::size_t rows_, cols_;
    std::vector<Matrix> generators_;
    std::vector<Matrix> basis_;
    Rref basis_rref_;
};

MatrixSpace span_identity(std::size_t d);
/// span{|i><j| - |j><i| : i < j} in M(d).
MatrixSpace skew_space(std::size_t d);
/// The full matrix space M(rows × cols).
MatrixSpace full_space(std::size_t rows, std::size_t cols);

MatrixSpace tensor(const MatrixSpace& s1, const MatrixSpace& s2,
                   std::size_t size_guard = kDefaultSizeGuard);
MatrixSpace tensor_power(const MatrixSpace& s, std::size_t n,
                         std::size_t size_guard = kDefaultSizeGuard);

Subspace image(const MatrixSpace& s);
Subspace kernel(const MatrixSpace& s);

/// {P·E·Q : E in S}; P and Q must be invertible.
MatrixSpace equivalent_transform(const MatrixSpace& s, const Matrix& p, const Matrix& q);

} // namespace matslocc

#endif
