#include "matslocc/matrix_space.hpp"

#include "matslocc/errors.hpp"

namespace matslocc {

Subspace Subspace::from_vectors(std::size_t ambient,
                                std::vector<std::vector<GaussianRational>> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw AmbientMismatch("subspace vector length != ambient");
    Subspace s;
    s.ambient = ambient;
    if (!vectors.empty()) s.basis = rref(std::move(vectors)).rows;
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<std::vector<GaussianRational>> vecs;
    for (std::size_t i : indices) {
        std::vector<GaussianRational> v(ambient);
        v.at(i) = GaussianRational(1);
        vecs.push_back(std::move(v));
    }
    return from_vectors(ambient, std::move(vecs));
}

bool Subspace::contains(const std::vector<GaussianRational>& v) const {
    if (v.size() != ambient) throw AmbientMismatch("contains: vector length != ambient");
    Rref r;
    r.rows = basis;
    for (const auto& row : basis) {
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) { r.pivot_cols.push_back(j); break; }
    }
    std::vector<GaussianRational> coords;
    return coords_in_rref(r, v, coords);
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient == other.ambient && basis == other.basis;
}

MatrixSpace::MatrixSpace(std::size_t rows, std::size_t cols, std::vector<Matrix> generators)
    : rows_(rows), cols_(cols), generators_(std::move(generators)) {
    if (rows_ == 0 || cols_ == 0) throw InvalidParams("matrix space with zero dimension side");
    if (generators_.empty()) throw InvalidParams("matrix space needs at least one generator");
    std::vector<std::vector<GaussianRational>> vecs;
    vecs.reserve(generators_.size());
    for (const auto& g : generators_) {
        if (g.rows() != rows_ || g.cols() != cols_)
            throw LengthMismatch("generator shape mismatch");
        vecs.push_back(g.vectorize());
    }
    basis_rref_ = rref(std::move(vecs));
    for (const auto& row : basis_rref_.rows)
        basis_.push_back(Matrix::from_vector(rows_, cols_, row));
}

Matrix MatrixSpace::evaluate(const std::vector<GaussianRational>& coeffs) const {
    if (coeffs.size() != basis_.size())
        throw LengthMismatch("evaluate: expected " + std::to_string(basis_.size()) +
                             " coefficients, got " + std::to_string(coeffs.size()));
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        out = out + coeffs[k] * basis_[k];
    }
    return out;
}

bool MatrixSpace::contains(const Matrix& x, std::vector<GaussianRational>* coords) const {
    if (x.rows() != rows_ || x.cols() != cols_) return false;
    std::vector<GaussianRational> c;
    if (!coords_in_rref(basis_rref_, x.vectorize(), c)) return false;
    if (coords) *coords = std::move(c);
    return true;
}

MatrixSpace span_identity(std::size_t d) {
    return MatrixSpace(d, d, {Matrix::identity(d)});
}

MatrixSpace skew_space(std::size_t d) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            gens.push_back(Matrix::elementary(d, d, i, j) - Matrix::elementary(d, d, j, i));
    return MatrixSpace(d, d, std::move(gens));
}

MatrixSpace full_space(std::size_t rows, std::size_t cols) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            gens.push_back(Matrix::elementary(rows, cols, i, j));
    return MatrixSpace(rows, cols, std::move(gens));
}

MatrixSpace tensor(const MatrixSpace& s1, const MatrixSpace& s2, std::size_t size_guard) {
    std::size_t m = s1.rows() * s2.rows();
    std::size_t n = s1.cols() * s2.cols();
    if (m * n > size_guard)
        throw SizeGuardExceeded("tensor: " + std::to_string(m) + "x" + std::to_string(n) +
                                " exceeds size guard");
    std::vector<Matrix> gens;
    gens.reserve(s1.dim() * s2.dim());
    for (const auto& a : s1.canonical_basis())
        for (const auto& b : s2.canonical_basis()) gens.push_back(kronecker(a, b));
    return MatrixSpace(m, n, std::move(gens));
}

MatrixSpace tensor_power(const MatrixSpace& s, std::size_t n, std::size_t size_guard) {
    if (n < 1) throw InvalidParams("tensor_power: n must be >= 1");
    // Guard on the final shape up front so we fail before any allocation.
    std::size_t m = 1, c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        m *= s.rows();
        c *= s.cols();
        if (m * c > size_guard)
            throw SizeGuardExceeded("tensor_power: final size exceeds size guard");
    }
    MatrixSpace out = s;
    for (std::size_t i = 1; i < n; ++i) out = tensor(out, s, size_guard);
    return out;
}

Subspace image(const MatrixSpace& s) {
    // Column span of all generators stacked side by side.
    std::vector<std::vector<GaussianRational>> cols;
    for (const auto& g : s.canonical_basis())
        for (std::size_t j = 0; j < g.cols(); ++j) {
            std::vector<GaussianRational> col(g.rows());
            bool nonzero = false;
            for (std::size_t i = 0; i < g.rows(); ++i) {
                col[i] = g.at(i, j);
                nonzero = nonzero || !col[i].is_zero();
            }
            if (nonzero) cols.push_back(std::move(col));
        }
    return Subspace::from_vectors(s.rows(), std::move(cols));
}

Subspace kernel(const MatrixSpace& s) {
    // Kernel of the generators stacked vertically.
    Matrix stacked(s.dim() * s.rows(), s.cols());
    std::size_t off = 0;
    for (const auto& g : s.canonical_basis()) {
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) stacked.at(off + i, j) = g.at(i, j);
        off += g.rows();
    }
    Subspace out;
    out.ambient = s.cols();
    out.basis = kernel_basis(stacked);
    return out;
}

MatrixSpace equivalent_transform(const MatrixSpace& s, const Matrix& p, const Matrix& q) {
    if (p.rows() != s.rows() || p.cols() != s.rows() || q.rows() != s.cols() || q.cols() != s.cols())
        throw LengthMismatch("equivalent_transform: P must be m x m and Q n x n");
    if (rank_exact(p) != p.rows() || rank_exact(q) != q.rows())
        throw SingularTransform("equivalent_transform: P and Q must be invertible");
    std::vector<Matrix> gens;
    gens.reserve(s.dim());
    for (const auto& g : s.canonical_basis()) gens.push_back(p * g * q);
    return MatrixSpace(s.rows(), s.cols(), std::move(gens));
}

} // namespace matslocc
