#include "matslocc/matrix.hpp"

#include "matslocc/errors.hpp"

namespace matslocc {

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m.at(i, j) = GaussianRational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LengthMismatch("matrix add: shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LengthMismatch("matrix sub: shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw LengthMismatch("matrix product: inner dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator*(const GaussianRational& c, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = c * a.data_[k];
    return out;
}

Matrix Matrix::from_vector(std::size_t rows, std::size_t cols,
                           const std::vector<GaussianRational>& v) {
    if (v.size() != rows * cols) throw LengthMismatch("from_vector: wrong length");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

std::vector<GaussianRational> Matrix::apply(const std::vector<GaussianRational>& u) const {
    if (u.size() != cols_) throw LengthMismatch("apply: vector length mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !u[j].is_zero()) out[i] += at(i, j) * u[j];
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GaussianRational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const GaussianRational& bkl = b.at(k, l);
                    if (!bkl.is_zero())
                        c.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return c;
}

Rref rref(std::vector<std::vector<GaussianRational>> rows) {
    Rref out;
    if (rows.empty()) return out;
    std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw LengthMismatch("rref: ragged rows");
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        GaussianRational inv = rows[lead][col].inverse();
        for (std::size_t j = col; j < ncols; ++j)
            if (!rows[lead][j].is_zero()) rows[lead][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col].is_zero()) continue;
            GaussianRational factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (!rows[lead][j].is_zero()) rows[i][j] -= factor * rows[lead][j];
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    out.rows = std::move(rows);
    return out;
}

bool coords_in_rref(const Rref& basis, const std::vector<GaussianRational>& v,
                    std::vector<GaussianRational>& coords) {
    coords.assign(basis.rank(), GaussianRational(0));
    std::vector<GaussianRational> residual = v;
    for (std::size_t k = 0; k < basis.rank(); ++k) {
        std::size_t col = basis.pivot_cols[k];
        GaussianRational c = residual[col];
        if (c.is_zero()) continue;
        coords[k] = c;
        for (std::size_t j = 0; j < residual.size(); ++j)
            if (!basis.rows[k][j].is_zero()) residual[j] -= c * basis.rows[k][j];
    }
    for (const auto& x : residual)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t rank_exact(const Matrix& a) {
    std::vector<std::vector<GaussianRational>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        rows[i].resize(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
    }
    return rref(std::move(rows)).rank();
}

std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& a) {
    std::vector<std::vector<GaussianRational>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        rows[i].resize(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
    }
    Rref r = rref(std::move(rows));
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussianRational> v(a.cols());
        v[free_col] = GaussianRational(1);
        for (std::size_t k = 0; k < r.rank(); ++k)
            v[r.pivot_cols[k]] = -r.rows[k][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rref column_space(const Matrix& a) {
    Matrix t = a.transpose();
    std::vector<std::vector<GaussianRational>> rows(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        rows[i].resize(t.cols());
        for (std::size_t j = 0; j < t.cols(); ++j) rows[i][j] = t.at(i, j);
    }
    return rref(std::move(rows));
}

FpMatrix FpMatrix::reduce(const Matrix& a, const PrimeField& f) {
    FpMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = f.reduce(a.at(i, j));
    return m;
}

} // namespace matslocc
