#include "exkat/abgroup.hpp"

#include "exkat/error.hpp"

#include <algorithm>
#include <sstream>

namespace exkat {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorKind::WidthMismatch, "row " + std::to_string(i) + " has width " +
                                                      std::to_string(rows[i].size()) + ", expected " +
                                                      std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error(ErrorKind::WidthMismatch, "column " + std::to_string(j) + " has height " +
                                                      std::to_string(columns[j].size()) + ", expected " +
                                                      std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (x.size() != cols_)
        throw Error(ErrorKind::ShapeMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " applied to matrix with " + std::to_string(cols_) +
                                                  " columns");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(x[j]) != 0) out[i] += (*this)(i, j) * x[j];
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& right) const {
    if (right.rows_ != rows_) throw Error(ErrorKind::ShapeMismatch, "hcat with different row counts");
    IntMatrix m(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
    }
    return m;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " and " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector v(n);
    v.at(i) = 1;
    return v;
}

// ---------------------------------------------------------------- SNF

namespace {

struct SnfWork {
    IntMatrix a, u, v, vi;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < vi.cols(); ++c) std::swap(vi(i, c), vi(j, c));
    }
    // row_dst -= q * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) -= q * u(src, c);
    }
    // col_dst -= q * col_src
    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
        for (std::size_t c = 0; c < vi.cols(); ++c) vi(src, c) += q * vi(dst, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

} // namespace

SnfResult snf(const IntMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SnfWork w{input, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
    IntMatrix& a = w.a;
    std::size_t t = 0;
    const std::size_t lim = std::min(m, n);

    while (t < lim) {
        // smallest |entry| in the trailing block, first in row-major order
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (sgn(a(i, j)) == 0) continue;
                Integer av = abs(a(i, j));
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                w.add_row(i, t, q);
                if (sgn(a(i, t)) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                w.add_col(j, t, q);
                if (sgn(a(t, j)) != 0) dirty = true;
            }
            if (dirty) {
                // move the smallest remainder in row/column t to the pivot
                std::size_t bi = t, bj = t;
                Integer bv = abs(a(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(a(i, t)) != 0 && abs(a(i, t)) < bv) {
                        bv = abs(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(a(t, j)) != 0 && abs(a(t, j)) < bv) {
                        bv = abs(a(t, j));
                        bi = t;
                        bj = j;
                    }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        w.add_row(t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (sgn(a(t, t)) < 0) w.negate_row(t);
        ++t;
    }

    SnfResult r;
    r.rank = t;
    r.d.resize(lim);
    for (std::size_t i = 0; i < lim; ++i) r.d[i] = a(i, i);
    r.u = std::move(w.u);
    r.v = std::move(w.v);
    r.v_inv = std::move(w.vi);
    return r;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    SnfResult s = snf(a);
    std::vector<IntVector> out;
    for (std::size_t j = s.rank; j < a.cols(); ++j) out.push_back(s.v.col(j));
    return out;
}

bool integer_solve(const IntMatrix& a, const IntVector& b, IntVector& x) {
    if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
    SnfResult s = snf(a);
    IntVector ub = s.u.apply(b);
    IntVector y(a.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), s.d[i].get_mpz_t())) return false;
            y[i] = ub[i] / s.d[i];
        } else if (sgn(ub[i]) != 0) {
            return false;
        }
    }
    x = s.v.apply(y);
    return true;
}

// ---------------------------------------------------------------- Lattice

Lattice Lattice::span(std::size_t dim, const std::vector<IntVector>& generators) {
    std::vector<IntVector> rows;
    for (const auto& g : generators) {
        if (g.size() != dim)
            throw Error(ErrorKind::WidthMismatch, "lattice generator of length " + std::to_string(g.size()) +
                                                      " in dimension " + std::to_string(dim));
        if (std::any_of(g.begin(), g.end(), [](const Integer& z) { return sgn(z) != 0; })) rows.push_back(g);
    }
    Lattice L;
    L.dim_ = dim;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (sgn(rows[i][c]) != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t k = c; k < dim; ++k) rows[i][k] -= q * rows[r][k];
                if (sgn(rows[i][c]) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && sgn(rows[r][c]) != 0) {
            if (sgn(rows[r][c]) < 0)
                for (auto& z : rows[r]) z = -z;
            for (std::size_t i = 0; i < r; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                if (sgn(q) != 0)
                    for (std::size_t k = c; k < dim; ++k) rows[i][k] -= q * rows[r][k];
            }
            L.pivots_.push_back(c);
            ++r;
        }
    }
    rows.resize(r);
    L.basis_ = std::move(rows);
    return L;
}

Lattice Lattice::full(std::size_t dim) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit_vector(dim, i));
    return span(dim, gens);
}

bool Lattice::contains(IntVector v) const {
    if (v.size() != dim_) throw Error(ErrorKind::WidthMismatch, "membership test in wrong dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = pivots_[i];
        for (std::size_t c = (i == 0 ? 0 : pivots_[i - 1] + 1); c < p; ++c)
            if (sgn(v[c]) != 0) return false;
        if (!mpz_divisible_p(v[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return false;
        Integer q = v[p] / basis_[i][p];
        if (sgn(q) != 0)
            for (std::size_t k = p; k < dim_; ++k) v[k] -= q * basis_[i][k];
    }
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; });
}

bool Lattice::contains(const Lattice& other) const {
    if (other.dim_ != dim_) throw Error(ErrorKind::AmbientMismatch, "lattices in different dimensions");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const IntVector& b) { return contains(b); });
}

bool Lattice::is_full() const {
    if (basis_.size() != dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        if (basis_[i][i] != 1) return false;
    return true;
}

// ---------------------------------------------------------------- presentations

GroupPresentation::GroupPresentation(std::size_t n_gens, IntMatrix relations)
    : n_gens_(n_gens), relations_(std::move(relations)) {
    if (relations_.rows() == 0) relations_ = IntMatrix(0, n_gens_);
    if (relations_.cols() != n_gens_)
        throw Error(ErrorKind::WidthMismatch, "relation width " + std::to_string(relations_.cols()) +
                                                  " for " + std::to_string(n_gens_) + " generators");
    snf_ = snf(relations_);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < relations_.rows(); ++i) rows.push_back(relations_.row(i));
    lattice_ = Lattice::span(n_gens_, rows);
}

GroupPresentation present(std::size_t n_gens, const IntMatrix& relations) {
    return GroupPresentation(n_gens, relations);
}

std::vector<Integer> GroupPresentation::torsion() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < snf_.rank; ++i)
        if (snf_.d[i] > 1) out.push_back(snf_.d[i]);
    return out;
}

std::size_t GroupPresentation::free_rank() const { return n_gens_ - snf_.rank; }

std::string GroupPresentation::describe() const {
    std::vector<std::string> parts;
    std::size_t r = free_rank();
    if (r == 1) parts.push_back("Z");
    if (r > 1) parts.push_back("Z^" + std::to_string(r));
    for (const auto& t : torsion()) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

bool GroupPresentation::elements_equal(const IntVector& x, const IntVector& y) const {
    if (x.size() != n_gens_ || y.size() != n_gens_)
        throw Error(ErrorKind::WidthMismatch, "element length does not match generator count");
    IntVector d(n_gens_);
    for (std::size_t i = 0; i < n_gens_; ++i) d[i] = x[i] - y[i];
    return lattice_.contains(d);
}

bool GroupPresentation::same_ambient(const GroupPresentation& other) const {
    return n_gens_ == other.n_gens_ && lattice_ == other.lattice_;
}

bool elements_equal(const GroupPresentation& g, const IntVector& x, const IntVector& y) {
    return g.elements_equal(x, y);
}

// ---------------------------------------------------------------- homomorphisms

GroupHom::GroupHom(GroupPresentation source, GroupPresentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 && matrix_.cols() == 0) matrix_ = IntMatrix(target_.n_gens(), source_.n_gens());
    if (matrix_.rows() != target_.n_gens() || matrix_.cols() != source_.n_gens())
        throw Error(ErrorKind::ShapeMismatch, "homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                                                  std::to_string(matrix_.cols()) + ", expected " +
                                                  std::to_string(target_.n_gens()) + "x" +
                                                  std::to_string(source_.n_gens()));
    const IntMatrix rt = target_.relations().transpose();
    for (std::size_t i = 0; i < source_.relations().rows(); ++i) {
        IntVector image = matrix_.apply(source_.relations().row(i));
        IntVector coeffs;
        if (!integer_solve(rt, image, coeffs))
            throw Error(ErrorKind::InconsistentConstraints,
                        "source relation " + std::to_string(i) + " does not map into the target relations");
        certificate_.push_back(std::move(coeffs));
    }
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!f.target().same_ambient(g.source()))
        throw Error(ErrorKind::AmbientMismatch, "composition of homomorphisms with different middle groups");
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

Lattice Subgroup::lattice() const {
    std::vector<IntVector> gens = generators;
    for (std::size_t i = 0; i < ambient.relations().rows(); ++i) gens.push_back(ambient.relations().row(i));
    return Lattice::span(ambient.n_gens(), gens);
}

namespace {

// Preimage in Z^{n_s} of the target relation lattice.
std::vector<IntVector> kernel_generators(const GroupHom& h) {
    const std::size_t ns = h.source().n_gens();
    const IntMatrix& rel = h.target().relations();
    IntMatrix neg(rel.cols(), rel.rows());
    for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j) neg(j, i) = -rel(i, j);
    IntMatrix block = h.matrix().hcat(neg);
    std::vector<IntVector> out;
    for (const auto& k : integer_kernel(block)) out.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(ns));
    return out;
}

} // namespace

Subgroup kernel_subgroup(const GroupHom& h) { return Subgroup{h.source(), kernel_generators(h)}; }

GroupPresentation kernel(const GroupHom& h) {
    Lattice pre = kernel_subgroup(h).lattice();
    const auto& basis = pre.basis();
    const std::size_t k = basis.size();
    // express each source relation in the basis of the preimage lattice
    IntMatrix bt = IntMatrix::from_columns(basis, h.source().n_gens());
    std::vector<IntVector> rels;
    for (std::size_t i = 0; i < h.source().relations().rows(); ++i) {
        IntVector c;
        if (!integer_solve(bt, h.source().relations().row(i), c))
            throw Error(ErrorKind::InconsistentConstraints, "source relation outside kernel lattice");
        rels.push_back(std::move(c));
    }
    return GroupPresentation(k, IntMatrix::from_rows(rels, k));
}

Subgroup image(const GroupHom& h) {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < h.matrix().cols(); ++j) cols.push_back(h.matrix().col(j));
    return Subgroup{h.target(), cols};
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
    if (!a.ambient.same_ambient(b.ambient))
        throw Error(ErrorKind::AmbientMismatch, "subgroups of different groups");
    return a.lattice() == b.lattice();
}

bool is_exact_at(const GroupHom& f, const GroupHom& g) {
    if (!f.target().same_ambient(g.source()))
        throw Error(ErrorKind::AmbientMismatch, "maps are not composable");
    return subgroups_equal(image(f), kernel_subgroup(g));
}

bool is_surjective(const GroupHom& h) { return image(h).lattice().is_full(); }

bool is_injective(const GroupHom& h) {
    return kernel_subgroup(h).lattice() == h.source().relation_lattice();
}

// ---------------------------------------------------------------- hom_solve

GroupHom hom_solve(const GroupPresentation& source, const GroupPresentation& target,
                   const std::vector<std::pair<IntVector, IntVector>>& constraints) {
    const std::size_t ns = source.n_gens(), nt = target.n_gens();
    std::vector<IntVector> src, dst;
    for (const auto& [s, t] : constraints) {
        if (s.size() != ns || t.size() != nt)
            throw Error(ErrorKind::WidthMismatch, "constraint of the wrong width");
        src.push_back(s);
        dst.push_back(t);
    }
    for (std::size_t i = 0; i < source.relations().rows(); ++i) {
        src.push_back(source.relations().row(i));
        dst.push_back(IntVector(nt));
    }
    if (!Lattice::span(ns, src).is_full())
        throw Error(ErrorKind::GeneratorsInsufficient, "prescribed elements do not generate the source");

    // Work in the target's Smith coordinates y = v^T x; x lies in the relation
    // lattice iff y_i is divisible by m_i (m_i = 0 past the rank).
    const SnfResult& s = target.snf_result();
    const IntMatrix vt = s.v.transpose();
    const std::size_t J = src.size();
    IntMatrix st = IntMatrix::from_rows(src, ns); // J x ns
    IntMatrix theta_p(nt, ns);
    for (std::size_t i = 0; i < nt; ++i) {
        Integer mod = i < s.rank ? s.d[i] : Integer(0);
        if (mod == 1) continue;
        IntVector rhs(J);
        for (std::size_t j = 0; j < J; ++j)
            for (std::size_t k = 0; k < nt; ++k) rhs[j] += vt(i, k) * dst[j][k];
        IntMatrix sys = st;
        if (sgn(mod) != 0) {
            IntMatrix m(J, J);
            for (std::size_t j = 0; j < J; ++j) m(j, j) = mod;
            sys = st.hcat(m);
        }
        IntVector sol;
        if (!integer_solve(sys, rhs, sol))
            throw Error(ErrorKind::InconsistentConstraints,
                        "no homomorphism satisfies the constraints (Smith coordinate " + std::to_string(i) + ")");
        for (std::size_t k = 0; k < ns; ++k) theta_p(i, k) = sol[k];
    }
    IntMatrix theta = s.v_inv.transpose() * theta_p;
    GroupHom h(source, target, theta);
    for (std::size_t j = 0; j < constraints.size(); ++j)
        if (!target.elements_equal(h.apply(constraints[j].first), constraints[j].second))
            throw Error(ErrorKind::InconsistentConstraints, "solved map misses constraint " + std::to_string(j));
    return h;
}

} // namespace exkat
