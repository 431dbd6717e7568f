#pragma once

// Exact finitely generated abelian groups: Smith normal form, Hermite-form
// lattices, presentations, homomorphisms, kernels, images and exactness.
// All arithmetic is arbitrary precision (GMP).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace exkat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    /// Rows given explicitly; every row must have `cols` entries.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntMatrix transpose() const;
    /// Matrix-vector product A x.
    IntVector apply(const IntVector& x) const;
    /// Horizontal concatenation [A | B].
    IntMatrix hcat(const IntMatrix& right) const;

    bool is_identity() const;
    bool operator==(const IntMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVector data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// u * a * v = diag(d), u and v unimodular; v_inv is the inverse of v.
struct SnfResult {
    std::vector<Integer> d; ///< length min(rows, cols); zeros trail, nonzero entries form a divisibility chain
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;
    std::size_t rank = 0;
};

/// Smith normal form with smallest-absolute-value pivoting and a row-major
/// scan, so results are reproducible.
SnfResult snf(const IntMatrix& a);

/// Integer kernel basis of A (columns of the returned vector span {x : A x = 0}).
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Some integer solution of A x = b, or nothing if none exists.
bool integer_solve(const IntMatrix& a, const IntVector& b, IntVector& x);

/// Sublattice of Z^dim held in canonical row Hermite normal form.
class Lattice {
public:
    Lattice() = default;
    static Lattice span(std::size_t dim, const std::vector<IntVector>& generators);
    static Lattice full(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<IntVector>& basis() const noexcept { return basis_; }

    bool contains(IntVector v) const;
    bool contains(const Lattice& other) const;
    bool is_full() const;

    bool operator==(const Lattice& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Abelian group <n_gens | relations>, one relation per row.
class GroupPresentation {
public:
    GroupPresentation() : GroupPresentation(0, IntMatrix(0, 0)) {}
    GroupPresentation(std::size_t n_gens, IntMatrix relations);

    static GroupPresentation free(std::size_t n) { return {n, IntMatrix(0, n)}; }

    std::size_t n_gens() const noexcept { return n_gens_; }
    const IntMatrix& relations() const noexcept { return relations_; }
    const SnfResult& snf_result() const noexcept { return snf_; }
    const Lattice& relation_lattice() const noexcept { return lattice_; }

    /// Invariant factors greater than one, ascending.
    std::vector<Integer> torsion() const;
    std::size_t free_rank() const;
    bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }
    /// e.g. "Z^2 + Z/2 + Z/6", "0".
    std::string describe() const;

    bool is_relation(const IntVector& x) const { return lattice_.contains(x); }
    bool elements_equal(const IntVector& x, const IntVector& y) const;
    /// Same generator count and same relation lattice.
    bool same_ambient(const GroupPresentation& other) const;

private:
    std::size_t n_gens_;
    IntMatrix relations_;
    SnfResult snf_;
    Lattice lattice_;
};

/// A homomorphism between presented groups given on generators. The
/// constructor checks that every source relation maps into the target
/// relation lattice and keeps the integer combinations as a certificate.
class GroupHom {
public:
    GroupHom(GroupPresentation source, GroupPresentation target, IntMatrix matrix);

    const GroupPresentation& source() const noexcept { return source_; }
    const GroupPresentation& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<IntVector>& certificate() const noexcept { return certificate_; }

    IntVector apply(const IntVector& x) const { return matrix_.apply(x); }

private:
    GroupPresentation source_;
    GroupPresentation target_;
    IntMatrix matrix_;
    std::vector<IntVector> certificate_;
};

GroupHom compose(const GroupHom& g, const GroupHom& f); // g after f

/// Subgroup of a presented group, given by generators.
struct Subgroup {
    GroupPresentation ambient;
    std::vector<IntVector> generators;

    /// Preimage lattice in Z^{n_gens}: generators plus ambient relations.
    Lattice lattice() const;
};

GroupPresentation kernel(const GroupHom& h);
Subgroup kernel_subgroup(const GroupHom& h);
Subgroup image(const GroupHom& h);
bool subgroups_equal(const Subgroup& a, const Subgroup& b);
bool elements_equal(const GroupPresentation& g, const IntVector& x, const IntVector& y);
/// image(f) == kernel(g) inside the middle group.
bool is_exact_at(const GroupHom& f, const GroupHom& g);
bool is_surjective(const GroupHom& h);
bool is_injective(const GroupHom& h);

GroupPresentation present(std::size_t n_gens, const IntMatrix& relations);

/// Solves for the homomorphism source -> target sending each constraint's
/// first element to its second. Throws Error(GeneratorsInsufficient) when the
/// prescribed source elements do not generate the source, and
/// Error(InconsistentConstraints) when no homomorphism exists.
GroupHom hom_solve(const GroupPresentation& source, const GroupPresentation& target,
                   const std::vector<std::pair<IntVector, IntVector>>& constraints);

IntVector unit_vector(std::size_t n, std::size_t i);

} // namespace exkat
