#pragma once

// Finite Krull-Schmidt triangulated categories presented by tables:
// indecomposables, Hom dimensions with chosen bases, composition structure
// constants, suspension and a registry of distinguished triangles.

#include "exkat/linalg.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace exkat {

struct Indec {
    std::string id;
    std::string name;
};

/// Direct sum of indecomposables, kept as sorted (index, multiplicity) pairs.
class Object {
public:
    Object() = default;
    static Object of(int index, int mult = 1);
    static Object from_copies(std::vector<int> copies);

    bool is_zero() const noexcept { return parts_.empty(); }
    const std::vector<std::pair<int, int>>& parts() const noexcept { return parts_; }
    /// One entry per indecomposable summand, ascending.
    std::vector<int> copies() const;
    std::size_t size() const;
    int multiplicity(int index) const;
    bool contains(int index) const { return multiplicity(index) > 0; }

    Object operator+(const Object& other) const;
    bool operator==(const Object& other) const = default;

private:
    std::vector<std::pair<int, int>> parts_;
};

/// Morphism between objects as blocks over summand copies: blocks[s][t]
/// holds coordinates in the chosen basis of Hom(source copy s, target copy t).
struct MorCoords {
    Object source;
    Object target;
    std::vector<std::vector<QVector>> blocks;

    /// Flattened coordinates: source copies outer, target copies next,
    /// basis index innermost.
    QVector flat() const;
    bool is_zero() const;
    bool operator==(const MorCoords& other) const = default;
};

struct TriangleRecord {
    int a = -1;
    Object mid;
    int b = -1;
    QVector f;     ///< a -> mid
    QVector g;     ///< mid -> b
    QVector delta; ///< b -> a[1]
};

/// A triangle a -> m -> b -> a[1] with arbitrary objects.
struct Triangle {
    Object a, m, b;
    MorCoords f, g, h;
};

class CatTable {
public:
    CatTable() = default;
    /// Sizes all tables for the given indecomposables; dims start at zero and
    /// the suspension at the identity.
    explicit CatTable(std::vector<Indec> indecs);

    std::size_t size() const noexcept { return indecs_.size(); }
    const std::vector<Indec>& indecs() const noexcept { return indecs_; }
    const Indec& indec(int i) const { return indecs_.at(static_cast<std::size_t>(i)); }
    /// Index of an id, or -1.
    int find(const std::string& id) const;
    int index_of(const std::string& id) const;

    std::size_t homdim(int a, int b) const { return homdim_[idx2(a, b)]; }
    /// Constants for Hom(b,c) x Hom(a,b) -> Hom(a,c), ordered
    /// [i over Hom(b,c)][j over Hom(a,b)][k over Hom(a,c)]; empty when any
    /// of the three spaces is zero.
    const QVector& comp(int a, int b, int c) const { return comp_[idx3(a, b, c)]; }
    const Rational& comp(int a, int b, int c, std::size_t i, std::size_t j, std::size_t k) const;

    int susp(int a) const { return susp_[static_cast<std::size_t>(a)]; }
    int susp_inv(int a) const { return susp_inv_[static_cast<std::size_t>(a)]; }
    int susp(int a, int k) const;
    /// Scalar by which [1] sends basis element k of Hom(a,b) to basis element k of Hom(a[1],b[1]).
    const Rational& basis_action(int a, int b, std::size_t k) const { return action_[idx2(a, b)].at(k); }

    const std::vector<TriangleRecord>& triangles() const noexcept { return triangles_; }

    // builders
    void set_homdim(int a, int b, std::size_t d);
    void set_comp(int a, int b, int c, QVector constants);
    void set_comp(int a, int b, int c, std::size_t i, std::size_t j, std::size_t k, const Rational& v);
    void set_susp(std::vector<int> perm);
    void set_basis_action(int a, int b, std::size_t k, const Rational& v);
    void add_triangle(TriangleRecord tr) { triangles_.push_back(std::move(tr)); }
    std::vector<TriangleRecord>& mutable_triangles() { return triangles_; }
    /// Identity constants for every Hom space; call after all dims are set.
    void init_identity_constants();

private:
    std::size_t idx2(int a, int b) const {
        return static_cast<std::size_t>(a) * indecs_.size() + static_cast<std::size_t>(b);
    }
    std::size_t idx3(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * indecs_.size() + static_cast<std::size_t>(b)) * indecs_.size() +
               static_cast<std::size_t>(c);
    }
    void check(int a) const;
    void resize_comp(int a, int b, int c);

    std::vector<Indec> indecs_;
    std::unordered_map<std::string, int> ids_;
    std::vector<std::size_t> homdim_;
    std::vector<QVector> comp_;
    std::vector<int> susp_, susp_inv_;
    std::vector<QVector> action_;
    std::vector<TriangleRecord> triangles_;
};

std::size_t hom_dim(const CatTable& t, const Object& a, const Object& b);
Object suspend(const CatTable& t, const Object& x, int k);

MorCoords zero_mor(const CatTable& t, const Object& source, const Object& target);
MorCoords identity_mor(const CatTable& t, const Object& x);
/// Basis element k of Hom(a,b) between indecomposables.
MorCoords basis_mor(const CatTable& t, int a, int b, std::size_t k = 0);
MorCoords mor_from_flat(const CatTable& t, const Object& source, const Object& target, const QVector& flat);

/// g after f.
MorCoords compose(const CatTable& t, const MorCoords& f, const MorCoords& g);
MorCoords suspend(const CatTable& t, const MorCoords& f, int k);
MorCoords scale(const MorCoords& f, const Rational& c);
MorCoords add(const MorCoords& f, const MorCoords& g);
/// Block-diagonal sum f (+) g.
MorCoords direct_sum(const CatTable& t, const MorCoords& f, const MorCoords& g);
/// Component from source summand copy s to target summand copy u.
const QVector& component(const MorCoords& f, std::size_t s, std::size_t u);

Triangle from_record(const CatTable& t, const TriangleRecord& tr);
/// (a,m,b,f,g,h) -> (m,b,a[1],g,h,-f[1]).
Triangle rotate_triangle(const CatTable& t, const Triangle& tr);
Triangle rotate_triangle(const CatTable& t, const TriangleRecord& tr);
Triangle suspend_triangle(const CatTable& t, const Triangle& tr, int k);
Triangle direct_sum(const CatTable& t, const Triangle& x, const Triangle& y);
/// g f = 0, h g = 0 and f[1] h = 0; `why` receives the failing condition.
bool locally_consistent(const CatTable& t, const Triangle& tr, std::string* why = nullptr);

/// Span in Hom(s,u) of all composites through indecomposables of w.
Subspace ideal(const CatTable& t, int s, int u, const std::vector<int>& w);
bool factors_through(const CatTable& t, const MorCoords& h, const std::vector<int>& w);

struct ValidationIssue {
    std::string kind;
    std::string message;
    bool warning = false;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const;
};

struct ValidateOptions {
    bool require_unit_constants = false;
};

ValidationReport validate(const CatTable& t, const ValidateOptions& opts = {});

/// Opposite category: Hom and composition reversed, suspension [-1],
/// triangles a->m->b->a[1] become b->m->a->b[-1].
CatTable opposite(const CatTable& t);

std::string object_label(const CatTable& t, const Object& x);

} // namespace exkat
