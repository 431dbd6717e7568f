#pragma once

// Exact linear algebra over Q: row reduction, kernels and subspaces.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace exkat {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

bool is_zero(const QVector& v);

/// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector apply(const QVector& x) const;
    std::size_t rank() const;
    /// Basis of {x : A x = 0}.
    std::vector<QVector> kernel() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    QVector data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols);

/// Subspace of Q^dim held as a reduced echelon basis, so equal subspaces
/// compare equal.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(std::size_t dim, std::vector<QVector> vectors);
    static Subspace zero(std::size_t dim) { return span(dim, {}); }
    static Subspace full(std::size_t dim);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<QVector>& basis() const noexcept { return basis_; }

    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<QVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : A x in W}.
Subspace preimage(const QMatrix& a, const Subspace& w);

} // namespace exkat
