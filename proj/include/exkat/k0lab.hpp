#pragma once

// Grothendieck groups of relative structures, indices, the error-term maps
// theta, additivity, exact sequences, resolutions and (n+2)-angles.

#include "exkat/abgroup.hpp"
#include "exkat/relstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exkat {

/// Free group on the chosen generators modulo e_a - e_mid + e_b for every
/// registry triangle whose class lies in the structure.
struct K0Instance {
    std::string tag;
    std::vector<int> generators; ///< indecomposable per generator
    std::vector<int> position;   ///< indecomposable -> generator, or -1
    GroupPresentation group;
    std::vector<int> relation_triangles;

    IntVector class_of(const Object& x) const;
};

K0Instance k0_split(const CatTable& t, const Subcat& x);
K0Instance k0(const CatTable& t, const SubBifunctor& sub);
K0Instance k0_full(const CatTable& t);

struct IndexClass {
    K0Instance k0;
    IntVector coords;
};

IndexClass index_right(const CatTable& t, const Subcat& n, const Object& c);
IndexClass index_left(const CatTable& t, const Subcat& n, const Object& c);

/// (dim Hom(x, C))_{x in X}.
IntVector qclass(const CatTable& t, const Subcat& x, const Object& c);
/// (rank of Hom(x, B) -> Hom(x, C))_{x in X} for h: B -> C.
IntVector im_qclass(const CatTable& t, const Subcat& x, const MorCoords& h);

struct IndexIsoReport {
    bool bijective = false;
    std::string target;                 ///< e.g. "Z^2"
    IntMatrix map;                      ///< K0^sp(X) -> K0(C^X_R) on generators
    std::vector<IntVector> index_vectors; ///< per indecomposable, preimage of its class in Z^{ind X}
};

/// Throws Error(NotBijective) when [x] |-> [x] is not an isomorphism.
IndexIsoReport index_iso_check(const CatTable& t, const Subcat& x);

/// Everything derived from a rigid X and N = perp0(X).
class RelativeK0 {
public:
    RelativeK0(const CatTable& t, Subcat x);

    const CatTable& table() const { return *t_; }
    const Subcat& x() const { return x_; }
    const Subcat& n() const { return n_; }
    const SubBifunctor& right() const { return right_; }
    const SubBifunctor& left() const { return left_; }
    const K0Instance& k0_right() const { return k0_right_; }
    const K0Instance& k0_left() const { return k0_left_; }
    const K0Instance& k0_ambient() const { return k0_full_; }
    /// Throw Error(InconsistentConstraints) when no homomorphism exists.
    const GroupHom& theta_right() const;
    const GroupHom& theta_left() const;
    GroupHom pi_right() const;
    GroupHom pi_left() const;

private:
    const CatTable* t_;
    Subcat x_, n_;
    SubBifunctor right_, left_;
    K0Instance k0_right_, k0_left_, k0_full_;
    mutable std::optional<GroupHom> theta_r_, theta_l_;
};

GroupHom theta_right(const CatTable& t, const Subcat& x);
GroupHom theta_left(const CatTable& t, const Subcat& x);

enum class Side { Right, Left };

struct AdditivityResult {
    bool ok = false;
    IntVector lhs;      ///< [A] - [B] + [C]
    IntVector image;    ///< im_qclass of h (right) or h[-1] (left)
    IntVector rhs;      ///< theta applied to image
};

AdditivityResult additivity_check(const RelativeK0& ctx, const Triangle& tr, Side side);
bool additivity_check(const CatTable& t, const Subcat& x, const Triangle& tr);

struct ExactnessReport {
    bool right_exact = false, left_exact = false;
    bool right_surjective = false, left_surjective = false;
    bool ok() const { return right_exact && left_exact && right_surjective && left_surjective; }
};
ExactnessReport exactness_check(const RelativeK0& ctx);

struct DiagramReport {
    std::string k0_two_sided;
    bool onto_right = false, onto_left = false, onto_ambient = false;
    bool p_defined = false, p_onto = false;
    bool ok() const { return onto_right && onto_left && onto_ambient && p_defined && p_onto; }
};
DiagramReport diagram_report(const RelativeK0& ctx);

struct FedeleReport {
    bool ok = false;
    bool rho_onto = false;
    bool kernel_matches = false;
    IntMatrix twisted; ///< index-vector form of theta, Z^{ind X} -> Z^{ind X}
};
FedeleReport fedele_fx_check(const RelativeK0& ctx);
bool fedele_fx_check(const CatTable& t, const Subcat& x);

// ---------------------------------------------------------------- resolutions

/// Building block of a conflation: a registry triangle rotated `rotation`
/// times, or the split sequence 0 -> s -> s.
struct Piece {
    enum class Kind { Registry, Split } kind = Kind::Registry;
    int triangle = -1;
    int rotation = 0;
    Object split;
};

/// Terms X_0..X_m with conflations C_{i+1} -> X_i -> C_i, C_0 = target and C_m = X_m.
struct Resolution {
    Object target;
    std::vector<Object> terms;
    std::vector<std::vector<Piece>> conflations;
};

Triangle piece_triangle(const CatTable& t, const Piece& p);
Triangle assemble(const CatTable& t, const std::vector<Piece>& pieces);

struct ResolutionCheck {
    bool ok = false;
    std::string reason;
    IntVector alternating_sum;
    IntVector index_vector;
};

/// Throws Error(MalformedResolution) for structural defects (counts, indices).
ResolutionCheck resolution_verify(const CatTable& t, const Subcat& x, const Resolution& r);
/// Depth-limited search through registry triangles; nothing if not found.
std::optional<Resolution> find_resolution(const CatTable& t, const Subcat& x, const Object& c, int depth = 3);

// ---------------------------------------------------------------- (n+2)-angles

/// Summand of a diagonal g1: scalar times the canonical map src -> tgt, where
/// src or tgt may be absent (zero object).
struct G1Piece {
    int src = -1;
    int tgt = -1;
    Rational scalar = 1;
};

struct AngleRecord {
    std::vector<Object> terms; ///< X_0, X_1, ..., X_{n+1}
    Object cocone;             ///< C in C -> X_1 -> X_0 -> C[1]
    Object cone;               ///< C[1]
    std::vector<int> cocone_triangles; ///< registry triangles realizing canonical cocones
    Resolution tail;
    IntVector alternating_sum; ///< over ind X
};

/// Throws Error(Unsupported) for g1 outside the supported class and
/// Error(NotRealizable) when the tail cannot be built from the registry.
AngleRecord higher_angles(const CatTable& t, const Subcat& x, int n, const std::vector<G1Piece>& g1);

struct HigherK0Report {
    std::size_t angles = 0;
    std::size_t sound_violations = 0;
    std::size_t unrealizable = 0; ///< candidate g1 whose tail the registry cannot build
    bool generated_equals_kernel = false;
    std::string kernel;    ///< description of Ker rho
    std::string gap;       ///< Ker rho / generated subgroup
};
HigherK0Report thm_higher_k0_check(const CatTable& t, const Subcat& x, int n);

} // namespace exkat
