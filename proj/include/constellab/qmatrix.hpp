#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "constellab/rational.hpp"

namespace constellab {

/// Dense matrix over the rationals.  Everything is exact; elimination uses
/// the first nonzero entry in column order as pivot (no numerical pivoting
/// needed), so all reduced forms are canonical and deterministic.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);
    /// Build from rows given as initializer lists (for tests and fixtures).
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    bool operator==(const QMatrix&) const = default;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // M v
    QMatrix transposed() const;

    /// Reduced row echelon form; pivot columns (ascending) reported through
    /// the optional out-parameter.  Zero rows are kept in place.
    QMatrix rref(std::vector<std::size_t>* pivot_columns = nullptr) const;

    std::size_t rank() const;

    /// Inverse of a square matrix, or nullopt if singular.
    std::optional<QMatrix> inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// A linear subspace of Q^n, stored as the canonical reduced row echelon
/// basis of its row space.  Two equal subspaces always compare equal.
class Subspace {
public:
    Subspace() = default;
    /// The subspace spanned by the rows of `vectors` inside Q^ambient.
    static Subspace span(const QMatrix& vectors, std::size_t ambient);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Span of the standard basis vectors with the given indices.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    /// Canonical basis, one vector per row, in reduced row echelon form.
    const QMatrix& basis() const { return basis_; }
    /// Pivot column of each basis row (strictly increasing).
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// Image under the linear map with matrix M (columns = ambient dim).
    Subspace image_under(const QMatrix& m) const;

    bool operator==(const Subspace&) const = default;
    /// Lexicographic on (ambient, dim, basis entries); a deterministic total
    /// order used for canonical witness tie-breaking.
    bool operator<(const Subspace& other) const;

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;  // dim x ambient, RREF, no zero rows
    std::vector<std::size_t> pivots_;
};

}  // namespace constellab
