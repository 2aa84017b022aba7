#include "constellab/qmatrix.hpp"

#include <algorithm>

namespace constellab {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InternalError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix sum shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InternalError("matrix difference shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InternalError("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivot_columns) const {
    QMatrix m = *this;
    if (pivot_columns) pivot_columns->clear();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        // First nonzero entry in this column at or below pivot_row.
        std::size_t sel = pivot_row;
        while (sel < rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row) continue;
            const Rational factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        if (pivot_columns) pivot_columns->push_back(col);
        ++pivot_row;
    }
    return m;
}

std::size_t QMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (!is_square()) throw InternalError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    // [A | I] -> [I | A^-1] by the same elimination as rref().
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    QMatrix red = aug.rref(&pivots);
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Subspace Subspace::span(const QMatrix& vectors, std::size_t ambient) {
    if (vectors.rows() > 0 && vectors.cols() != ambient)
        throw InternalError("span: vector length does not match ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    std::vector<std::size_t> pivots;
    QMatrix red = vectors.rref(&pivots);
    QMatrix basis(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = red.at(i, j);
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::zero(std::size_t ambient) { return span(QMatrix(0, ambient), ambient); }

Subspace Subspace::full(std::size_t ambient) {
    return span(QMatrix::identity(ambient), ambient);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    QMatrix rows(indices.size(), ambient);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= ambient) throw InternalError("coordinate subspace index out of range");
        rows.at(i, indices[i]) = 1;
    }
    return span(rows, ambient);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw InternalError("contains: vector length mismatch");
    // Reduce v against the RREF basis; contained iff the residue vanishes.
    std::vector<Rational> residue = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational factor = residue[pivots_[i]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) residue[j] -= factor * basis_.at(i, j);
    }
    return std::all_of(residue.begin(), residue.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InternalError("contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
        std::vector<Rational> row(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) row[j] = other.basis_.at(i, j);
        if (!contains(row)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InternalError("sum: ambient dimension mismatch");
    QMatrix stacked(dim() + other.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = other.basis_.at(i, j);
    return span(stacked, ambient_);
}

Subspace Subspace::image_under(const QMatrix& m) const {
    if (m.cols() != ambient_) throw InternalError("image_under: shape mismatch");
    QMatrix images(dim(), m.rows());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::vector<Rational> v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
        std::vector<Rational> w = m.apply(v);
        for (std::size_t j = 0; j < w.size(); ++j) images.at(i, j) = w[j];
    }
    return span(images, m.rows());
}

bool Subspace::operator<(const Subspace& other) const {
    if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
    if (dim() != other.dim()) return dim() < other.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            const Rational &a = basis_.at(i, j), &b = other.basis_.at(i, j);
            if (a != b) return a < b;
        }
    return false;
}

}  // namespace constellab
