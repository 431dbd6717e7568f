#pragma once

// Subcategory predicates and relative extriangulated structures, given as
// subspaces of E(c,a) = Hom(c, a[1]) for every pair of indecomposables.

#include "exkat/cattable.hpp"

#include <string>
#include <vector>

namespace exkat {

/// Additive closure of a set of indecomposables; kept sorted and unique.
using Subcat = std::vector<int>;

Subcat make_subcat(std::vector<int> ids);
bool in_subcat(const Subcat& s, int i);
bool in_add(const Subcat& s, const Object& x);
Subcat all_indecs(const CatTable& t);
Subcat suspend(const CatTable& t, const Subcat& s, int k);

enum class Variant { Full, Zero, XRight, XLeft, XBoth, NRight, NLeft, NBoth };
const char* to_string(Variant v);

struct SubBifunctor {
    Variant variant = Variant::Full;
    Subcat w;
    std::size_t n = 0;
    std::vector<Subspace> spaces; ///< index c * n + a, subspace of Hom(c, a[1])

    const Subspace& at(int c, int a) const {
        return spaces[static_cast<std::size_t>(c) * n + static_cast<std::size_t>(a)];
    }
    bool contains(int c, int a, const QVector& h) const { return at(c, a).contains(h); }
    /// Class h: C -> A[1] between arbitrary objects, tested blockwise.
    bool contains(const CatTable& t, const MorCoords& h) const;
    /// Every value is contained in the corresponding value of `other`.
    bool within(const SubBifunctor& other) const;
    bool same_values(const SubBifunctor& other) const { return spaces == other.spaces; }
};

bool is_rigid(const CatTable& t, const Subcat& x);
/// Two-sided orthogonality characterization for Hom(-, -[i]), 1 <= i <= n-1.
bool is_cluster_tilting(const CatTable& t, const Subcat& x, int n);
/// {c : Hom(x, c) = 0 for all x in X}.
Subcat perp0(const CatTable& t, const Subcat& x);

enum class ConeWitness { Registry, Theorem, NotWitnessed };
const char* to_string(ConeWitness w);
struct ConeResult {
    ConeWitness kind = ConeWitness::NotWitnessed;
    std::string detail;
    bool holds() const { return kind != ConeWitness::NotWitnessed; }
};
/// Witnesses Cone(N,N) = C through registry triangles (with rotations) or
/// through N = perp0(X) for a rigid X. Never reports a false positive.
ConeResult cone_condition(const CatTable& t, const Subcat& n, const Subcat* rigid_x = nullptr);

/// Relative structure cut out by the defining linear conditions.
SubBifunctor relative_ext(const CatTable& t, Variant variant, const Subcat& w);
/// Factorization forms of the N variants, valid under the cone condition.
SubBifunctor relative_ext_factorization(const CatTable& t, Variant variant, const Subcat& n);

/// Stability under precomposition and postcomposition by all basis morphisms.
bool is_sub_bifunctor(const CatTable& t, const SubBifunctor& sub, std::string* witness = nullptr);

/// N-right on perp0(X) equals X-right on X, and likewise on the left.
bool comparison_check(const CatTable& t, const Subcat& x);

enum class Verdict { Pass, Fail, NotRefuted };
const char* to_string(Verdict v);
struct PredicateResult {
    Verdict verdict = Verdict::NotRefuted;
    int triangle = -1; ///< registry index of the witnessing conflation
    std::string witness;
};

PredicateResult is_extension_closed(const CatTable& t, const SubBifunctor& sub, const Subcat& n);
PredicateResult is_thick(const CatTable& t, const SubBifunctor& sub, const Subcat& n);
PredicateResult is_serre(const CatTable& t, const SubBifunctor& sub, const Subcat& n);

/// Matrix of f o - : Hom(x, S) -> Hom(x, T), bases ordered by summand copy.
QMatrix postcomposition(const CatTable& t, int x, const MorCoords& f);

/// Hom(x',A) -> Hom(x',B) -> Hom(x',C) -> 0 is exact for all x' in X. Throws
/// Error(ClassNotInSub) unless the class lies in the N-right structure of perp0(X).
bool q_right_exactness_check(const CatTable& t, const Subcat& x, const Triangle& conflation);

std::string subcat_label(const CatTable& t, const Subcat& s);

} // namespace exkat
