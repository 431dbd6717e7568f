#include "exkat/linalg.hpp"

#include "exkat/error.hpp"

#include <algorithm>

namespace exkat {

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column height mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row width mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::apply(const QVector& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(x[j]) != 0) out[i] += (*this)(i, j) * x[j];
    return out;
}

std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t QMatrix::rank() const {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < rows_; ++i)
        rows.emplace_back(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return rref(rows, cols_).size();
}

std::vector<QVector> QMatrix::kernel() const {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < rows_; ++i)
        rows.emplace_back(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    auto pivots = rref(rows, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::span(std::size_t dim, std::vector<QVector> vectors) {
    for (const auto& v : vectors)
        if (v.size() != dim) throw Error(ErrorKind::ShapeMismatch, "vector outside ambient space");
    Subspace s;
    s.dim_ = dim;
    s.pivots_ = rref(vectors, dim);
    s.basis_ = std::move(vectors);
    return s;
}

Subspace Subspace::full(std::size_t dim) {
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < dim; ++i) {
        QVector v(dim);
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return span(dim, std::move(vs));
}

bool Subspace::contains(const QVector& v0) const {
    if (v0.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "vector outside ambient space");
    QVector v = v0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = v[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * basis_[i][k];
    }
    return is_zero(v);
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const QVector& b) { return contains(b); });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.dim_ != dim_) throw Error(ErrorKind::AmbientMismatch, "subspaces of different spaces");
    auto vs = basis_;
    vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
    return span(dim_, std::move(vs));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.dim_ != dim_) throw Error(ErrorKind::AmbientMismatch, "subspaces of different spaces");
    // solve sum a_i b_i = sum c_j o_j
    const std::size_t p = basis_.size(), q = other.basis_.size();
    QMatrix m(dim_, p + q);
    for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t i = 0; i < p; ++i) m(k, i) = basis_[i][k];
        for (std::size_t j = 0; j < q; ++j) m(k, p + j) = -other.basis_[j][k];
    }
    std::vector<QVector> vs;
    for (const auto& sol : m.kernel()) {
        QVector v(dim_);
        for (std::size_t i = 0; i < p; ++i)
            if (sgn(sol[i]) != 0)
                for (std::size_t k = 0; k < dim_; ++k) v[k] += sol[i] * basis_[i][k];
        vs.push_back(std::move(v));
    }
    return span(dim_, std::move(vs));
}

Subspace preimage(const QMatrix& a, const Subspace& w) {
    if (a.rows() != w.ambient_dim()) throw Error(ErrorKind::ShapeMismatch, "preimage target mismatch");
    const std::size_t n = a.cols(), k = w.dim();
    QMatrix m(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) m(i, n + j) = -w.basis()[j][i];
    }
    std::vector<QVector> vs;
    for (const auto& sol : m.kernel()) vs.emplace_back(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(n));
    return Subspace::span(n, std::move(vs));
}

} // namespace exkat
