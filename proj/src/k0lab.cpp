#include "exkat/k0lab.hpp"

#include "exkat/error.hpp"

#include <algorithm>

namespace exkat {

IntVector K0Instance::class_of(const Object& x) const {
    IntVector v(generators.size());
    for (auto [i, m] : x.parts()) {
        const int p = position.at(static_cast<std::size_t>(i));
        if (p < 0) throw Error(ErrorKind::InvalidInput, "object has a summand outside the generators");
        v[static_cast<std::size_t>(p)] += m;
    }
    return v;
}

namespace {

K0Instance make_instance(const CatTable& t, const std::string& tag, const std::vector<int>& gens) {
    K0Instance k;
    k.tag = tag;
    k.generators = gens;
    k.position.assign(t.size(), -1);
    for (std::size_t i = 0; i < gens.size(); ++i) k.position[static_cast<std::size_t>(gens[i])] = static_cast<int>(i);
    return k;
}

} // namespace

K0Instance k0_split(const CatTable& t, const Subcat& x) {
    K0Instance k = make_instance(t, "split", x);
    k.group = GroupPresentation::free(x.size());
    return k;
}

K0Instance k0(const CatTable& t, const SubBifunctor& sub) {
    K0Instance k = make_instance(t, to_string(sub.variant), all_indecs(t));
    const std::size_t n = t.size();
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < t.triangles().size(); ++r) {
        const TriangleRecord& tr = t.triangles()[r];
        if (!sub.contains(tr.b, tr.a, tr.delta)) continue;
        IntVector row(n);
        row[static_cast<std::size_t>(tr.a)] += 1;
        row[static_cast<std::size_t>(tr.b)] += 1;
        for (auto [i, m] : tr.mid.parts()) row[static_cast<std::size_t>(i)] -= m;
        rows.push_back(std::move(row));
        k.relation_triangles.push_back(static_cast<int>(r));
    }
    k.group = GroupPresentation(n, IntMatrix::from_rows(rows, n));
    return k;
}

K0Instance k0_full(const CatTable& t) { return k0(t, relative_ext(t, Variant::Full, {})); }

IndexClass index_right(const CatTable& t, const Subcat& n, const Object& c) {
    K0Instance k = k0(t, relative_ext(t, Variant::NRight, n));
    IntVector v = k.class_of(c);
    return {std::move(k), std::move(v)};
}

IndexClass index_left(const CatTable& t, const Subcat& n, const Object& c) {
    K0Instance k = k0(t, relative_ext(t, Variant::NLeft, n));
    IntVector v = k.class_of(c);
    return {std::move(k), std::move(v)};
}

IntVector qclass(const CatTable& t, const Subcat& x, const Object& c) {
    IntVector v;
    for (int y : x) v.push_back(Integer(static_cast<unsigned long>(hom_dim(t, Object::of(y), c))));
    return v;
}

IntVector im_qclass(const CatTable& t, const Subcat& x, const MorCoords& h) {
    IntVector v;
    for (int y : x) v.push_back(Integer(static_cast<unsigned long>(postcomposition(t, y, h).rank())));
    return v;
}

namespace {

// Some integer preimage of `target` under the generator map, modulo relations.
bool solve_mod(const IntMatrix& map, const GroupPresentation& g, const IntVector& target, IntVector& out) {
    IntMatrix sys = map.hcat(g.relations().transpose());
    IntVector sol;
    if (!integer_solve(sys, target, sol)) return false;
    out.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(map.cols()));
    return true;
}

IntMatrix inclusion_matrix(const CatTable& t, const Subcat& x) {
    IntMatrix m(t.size(), x.size());
    for (std::size_t j = 0; j < x.size(); ++j) m(static_cast<std::size_t>(x[j]), j) = 1;
    return m;
}

} // namespace

IndexIsoReport index_iso_check(const CatTable& t, const Subcat& x) {
    const K0Instance target = k0(t, relative_ext(t, Variant::XRight, x));
    IndexIsoReport rep;
    rep.map = inclusion_matrix(t, x);
    GroupHom h(GroupPresentation::free(x.size()), target.group, rep.map);
    rep.target = target.group.describe();
    rep.bijective = is_injective(h) && is_surjective(h);
    if (!rep.bijective)
        throw Error(ErrorKind::NotBijective, "K0^sp(X) -> K0(C^X_R) is not bijective for X = " + subcat_label(t, x) +
                                                 " (target " + rep.target + ")");
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        IntVector v;
        if (!solve_mod(rep.map, target.group, unit_vector(t.size(), static_cast<std::size_t>(c)), v))
            throw Error(ErrorKind::NotBijective, "no index vector for " + t.indec(c).id);
        rep.index_vectors.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------- RelativeK0

RelativeK0::RelativeK0(const CatTable& t, Subcat x) : t_(&t), x_(make_subcat(std::move(x))) {
    if (!is_rigid(t, x_)) throw Error(ErrorKind::InvalidInput, "X = " + subcat_label(t, x_) + " is not rigid");
    n_ = perp0(t, x_);
    right_ = relative_ext(t, Variant::NRight, n_);
    left_ = relative_ext(t, Variant::NLeft, n_);
    k0_right_ = k0(t, right_);
    k0_left_ = k0(t, left_);
    k0_full_ = k0_full(t);
}

namespace {

GroupHom solve_theta(const CatTable& t, const Subcat& x, const K0Instance& target, int shift) {
    std::vector<std::pair<IntVector, IntVector>> cons;
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        IntVector rhs = target.class_of(Object::of(c) + Object::of(t.susp(c, shift)));
        cons.emplace_back(qclass(t, x, Object::of(c)), std::move(rhs));
    }
    return hom_solve(GroupPresentation::free(x.size()), target.group, cons);
}

} // namespace

const GroupHom& RelativeK0::theta_right() const {
    if (!theta_r_) theta_r_.emplace(solve_theta(*t_, x_, k0_right_, -1));
    return *theta_r_;
}

const GroupHom& RelativeK0::theta_left() const {
    if (!theta_l_) theta_l_.emplace(solve_theta(*t_, x_, k0_left_, 1));
    return *theta_l_;
}

GroupHom RelativeK0::pi_right() const {
    return GroupHom(k0_right_.group, k0_full_.group, IntMatrix::identity(t_->size()));
}

GroupHom RelativeK0::pi_left() const {
    return GroupHom(k0_left_.group, k0_full_.group, IntMatrix::identity(t_->size()));
}

GroupHom theta_right(const CatTable& t, const Subcat& x) { return RelativeK0(t, x).theta_right(); }
GroupHom theta_left(const CatTable& t, const Subcat& x) { return RelativeK0(t, x).theta_left(); }

AdditivityResult additivity_check(const RelativeK0& ctx, const Triangle& tr, Side side) {
    const CatTable& t = ctx.table();
    const K0Instance& k = side == Side::Right ? ctx.k0_right() : ctx.k0_left();
    const GroupHom& theta = side == Side::Right ? ctx.theta_right() : ctx.theta_left();
    AdditivityResult r;
    IntVector a = k.class_of(tr.a), b = k.class_of(tr.m), c = k.class_of(tr.b);
    r.lhs.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.lhs[i] = a[i] - b[i] + c[i];
    r.image = im_qclass(t, ctx.x(), side == Side::Right ? tr.h : suspend(t, tr.h, -1));
    r.rhs = theta.apply(r.image);
    r.ok = k.group.elements_equal(r.lhs, r.rhs);
    return r;
}

bool additivity_check(const CatTable& t, const Subcat& x, const Triangle& tr) {
    RelativeK0 ctx(t, x);
    return additivity_check(ctx, tr, Side::Right).ok && additivity_check(ctx, tr, Side::Left).ok;
}

ExactnessReport exactness_check(const RelativeK0& ctx) {
    ExactnessReport r;
    GroupHom pr = ctx.pi_right(), pl = ctx.pi_left();
    r.right_exact = is_exact_at(ctx.theta_right(), pr);
    r.left_exact = is_exact_at(ctx.theta_left(), pl);
    r.right_surjective = is_surjective(pr);
    r.left_surjective = is_surjective(pl);
    return r;
}

DiagramReport diagram_report(const RelativeK0& ctx) {
    const CatTable& t = ctx.table();
    DiagramReport r;
    const K0Instance both = k0(t, relative_ext(t, Variant::NBoth, ctx.n()));
    r.k0_two_sided = both.group.describe();
    const IntMatrix id = IntMatrix::identity(t.size());
    r.onto_right = is_surjective(GroupHom(both.group, ctx.k0_right().group, id));
    r.onto_left = is_surjective(GroupHom(both.group, ctx.k0_left().group, id));
    r.onto_ambient = is_surjective(GroupHom(both.group, ctx.k0_ambient().group, id));
    IntMatrix p(ctx.x().size(), t.size());
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        IntVector q = qclass(t, ctx.x(), Object::of(c));
        for (std::size_t i = 0; i < q.size(); ++i) p(i, static_cast<std::size_t>(c)) = q[i];
    }
    try {
        GroupHom ph(both.group, GroupPresentation::free(ctx.x().size()), p);
        r.p_defined = true;
        r.p_onto = is_surjective(ph);
    } catch (const Error&) {
        r.p_defined = false;
    }
    return r;
}

FedeleReport fedele_fx_check(const RelativeK0& ctx) {
    const CatTable& t = ctx.table();
    const Subcat& x = ctx.x();
    const std::size_t m = x.size();
    FedeleReport r;
    const IntMatrix iota = inclusion_matrix(t, x);
    const GroupHom& theta = ctx.theta_right();
    r.twisted = IntMatrix(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        IntVector v;
        if (!solve_mod(iota, ctx.k0_right().group, theta.matrix().col(j), v)) return r;
        for (std::size_t i = 0; i < m; ++i) r.twisted(i, j) = v[i];
    }
    GroupHom rho(GroupPresentation::free(m), ctx.k0_ambient().group, iota);
    r.rho_onto = is_surjective(rho);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < m; ++j) cols.push_back(r.twisted.col(j));
    r.kernel_matches = kernel_subgroup(rho).lattice() == Lattice::span(m, cols);
    r.ok = r.rho_onto && r.kernel_matches;
    return r;
}

bool fedele_fx_check(const CatTable& t, const Subcat& x) { return fedele_fx_check(RelativeK0(t, x)).ok; }

// ---------------------------------------------------------------- resolutions

Triangle piece_triangle(const CatTable& t, const Piece& p) {
    if (p.kind == Piece::Kind::Split) {
        const Object& s = p.split;
        return Triangle{Object{}, s, s, zero_mor(t, Object{}, s), identity_mor(t, s), zero_mor(t, s, Object{})};
    }
    if (p.triangle < 0 || static_cast<std::size_t>(p.triangle) >= t.triangles().size() || p.rotation < 0)
        throw Error(ErrorKind::MalformedResolution, "piece refers to registry triangle " + std::to_string(p.triangle));
    Triangle tri = from_record(t, t.triangles()[static_cast<std::size_t>(p.triangle)]);
    for (int r = 0; r < p.rotation; ++r) tri = rotate_triangle(t, tri);
    return tri;
}

Triangle assemble(const CatTable& t, const std::vector<Piece>& pieces) {
    if (pieces.empty()) throw Error(ErrorKind::MalformedResolution, "conflation without pieces");
    Triangle tri = piece_triangle(t, pieces.front());
    for (std::size_t i = 1; i < pieces.size(); ++i) tri = direct_sum(t, tri, piece_triangle(t, pieces[i]));
    return tri;
}

ResolutionCheck resolution_verify(const CatTable& t, const Subcat& x, const Resolution& r) {
    if (r.terms.empty()) throw Error(ErrorKind::MalformedResolution, "resolution without terms");
    if (r.conflations.size() + 1 != r.terms.size())
        throw Error(ErrorKind::MalformedResolution, "need one conflation fewer than terms");
    ResolutionCheck out;
    auto reject = [&](const std::string& why) {
        out.reason = why;
        return out;
    };
    const SubBifunctor sub = relative_ext(t, Variant::XRight, x);
    for (std::size_t i = 0; i < r.terms.size(); ++i)
        if (!in_add(x, r.terms[i])) return reject("term " + std::to_string(i) + " is not in add X");
    Object c = r.target;
    for (std::size_t i = 0; i < r.conflations.size(); ++i) {
        Triangle tri = assemble(t, r.conflations[i]);
        const std::string at = "conflation " + std::to_string(i) + ": ";
        if (!(tri.b == c)) return reject(at + "end term " + object_label(t, tri.b) + " != " + object_label(t, c));
        if (!(tri.m == r.terms[i]))
            return reject(at + "middle term " + object_label(t, tri.m) + " != " + object_label(t, r.terms[i]));
        std::string why;
        if (!locally_consistent(t, tri, &why)) return reject(at + why);
        if (!sub.contains(t, tri.h)) return reject(at + "class not in the relative structure");
        c = tri.a;
    }
    if (!(c == r.terms.back())) return reject("last cocone " + object_label(t, c) + " != last term");

    out.alternating_sum = IntVector(x.size());
    const K0Instance sp = k0_split(t, x);
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        IntVector v = sp.class_of(r.terms[i]);
        for (std::size_t k = 0; k < v.size(); ++k) out.alternating_sum[k] += (i % 2 ? -v[k] : v[k]);
    }
    const IndexIsoReport iso = index_iso_check(t, x);
    out.index_vector = IntVector(x.size());
    for (auto [i, m] : r.target.parts())
        for (std::size_t k = 0; k < x.size(); ++k)
            out.index_vector[k] += m * iso.index_vectors[static_cast<std::size_t>(i)][k];
    // index vectors are unique because the map is bijective onto a free group
    if (out.alternating_sum != out.index_vector) return reject("alternating sum differs from the index vector");
    out.ok = true;
    return out;
}

namespace {

std::optional<Resolution> resolve_indec(const CatTable& t, const Subcat& x, const SubBifunctor& sub, int c,
                                        int depth);

// Combine resolutions of the summands of an object, padding shorter ones with
// split pieces.
std::optional<Resolution> resolve_object(const CatTable& t, const Subcat& x, const SubBifunctor& sub,
                                         const Object& obj, int depth) {
    std::vector<Resolution> parts;
    for (int c : obj.copies()) {
        auto r = resolve_indec(t, x, sub, c, depth);
        if (!r) return std::nullopt;
        parts.push_back(std::move(*r));
    }
    Resolution out;
    out.target = obj;
    std::size_t len = 0;
    for (const auto& p : parts) len = std::max(len, p.conflations.size());
    out.terms.assign(len + 1, Object{});
    out.conflations.assign(len, {});
    for (const auto& p : parts) {
        const std::size_t l = p.conflations.size();
        for (std::size_t i = 0; i < l; ++i) {
            out.terms[i] = out.terms[i] + p.terms[i];
            out.conflations[i].insert(out.conflations[i].end(), p.conflations[i].begin(), p.conflations[i].end());
        }
        out.terms[l] = out.terms[l] + p.terms[l];
        if (l < len) out.conflations[l].push_back(Piece{Piece::Kind::Split, -1, 0, p.terms[l]});
    }
    return out;
}

std::optional<Resolution> resolve_indec(const CatTable& t, const Subcat& x, const SubBifunctor& sub, int c,
                                        int depth) {
    if (in_subcat(x, c)) return Resolution{Object::of(c), {Object::of(c)}, {}};
    if (depth <= 0) return std::nullopt;
    for (std::size_t r = 0; r < t.triangles().size(); ++r)
        for (int rot = 0; rot < 3; ++rot) {
            Piece p{Piece::Kind::Registry, static_cast<int>(r), rot, {}};
            Triangle tri = piece_triangle(t, p);
            if (!(tri.b == Object::of(c)) || !in_add(x, tri.m) || tri.a.is_zero()) continue;
            if (!sub.contains(t, tri.h)) continue;
            auto rest = resolve_object(t, x, sub, tri.a, depth - 1);
            if (!rest) continue;
            Resolution out;
            out.target = Object::of(c);
            out.terms.push_back(tri.m);
            out.conflations.push_back({p});
            out.terms.insert(out.terms.end(), rest->terms.begin(), rest->terms.end());
            out.conflations.insert(out.conflations.end(), rest->conflations.begin(), rest->conflations.end());
            return out;
        }
    return std::nullopt;
}

} // namespace

std::optional<Resolution> find_resolution(const CatTable& t, const Subcat& x, const Object& c, int depth) {
    const SubBifunctor sub = relative_ext(t, Variant::XRight, x);
    return resolve_object(t, x, sub, c, depth);
}

} // namespace exkat
