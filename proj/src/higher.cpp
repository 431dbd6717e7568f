#include "exkat/error.hpp"
#include "exkat/k0lab.hpp"

#include <set>

namespace exkat {

namespace {

int find_record(const CatTable& t, int a, const Object& mid_hint, int b, bool any_mid) {
    for (std::size_t r = 0; r < t.triangles().size(); ++r) {
        const TriangleRecord& tr = t.triangles()[r];
        if (tr.a == a && tr.b == b && (any_mid || tr.mid == mid_hint)) return static_cast<int>(r);
    }
    return -1;
}

void check_setting(const CatTable& t, const Subcat& x, int n) {
    if (n < 1) throw Error(ErrorKind::Unsupported, "angle order must be at least 1");
    if (!is_cluster_tilting(t, x, n))
        throw Error(ErrorKind::Unsupported, subcat_label(t, x) + " is not " + std::to_string(n) + "-cluster-tilting");
    if (suspend(t, x, n) != x)
        throw Error(ErrorKind::Unsupported, subcat_label(t, x) + " is not stable under [" + std::to_string(n) + "]");
}

AngleRecord build_angle(const CatTable& t, const Subcat& x, int n, const std::vector<G1Piece>& g1) {
    AngleRecord rec;
    Object x1, x0;
    for (const auto& p : g1) {
        if (p.src < 0 && p.tgt < 0) throw Error(ErrorKind::Unsupported, "g1 summand without source and target");
        if ((p.src >= 0 && !in_subcat(x, p.src)) || (p.tgt >= 0 && !in_subcat(x, p.tgt)))
            throw Error(ErrorKind::Unsupported, "g1 summand outside add X");
        if (p.src >= 0) x1 = x1 + Object::of(p.src);
        if (p.tgt >= 0) x0 = x0 + Object::of(p.tgt);
        if (p.src < 0) {
            rec.cocone = rec.cocone + Object::of(t.susp(p.tgt, -1));
        } else if (p.tgt < 0) {
            rec.cocone = rec.cocone + Object::of(p.src);
        } else if (p.scalar == 0) {
            rec.cocone = rec.cocone + Object::of(p.src) + Object::of(t.susp(p.tgt, -1));
        } else {
            if (t.homdim(p.src, p.tgt) != 1)
                throw Error(ErrorKind::Unsupported, "no canonical map " + t.indec(p.src).id + " -> " + t.indec(p.tgt).id);
            const int r = find_record(t, t.susp(p.tgt, -1), Object{}, p.src, true);
            if (r < 0)
                throw Error(ErrorKind::NotRealizable, "no registry triangle with connecting map " + t.indec(p.src).id +
                                                          " -> " + t.indec(p.tgt).id);
            rec.cocone = rec.cocone + t.triangles()[static_cast<std::size_t>(r)].mid;
            rec.cocone_triangles.push_back(r);
        }
    }
    rec.cone = suspend(t, rec.cocone, 1);

    auto tail = find_resolution(t, x, rec.cocone, n - 1);
    if (!tail)
        throw Error(ErrorKind::NotRealizable, "cannot resolve " + object_label(t, rec.cocone) + " from the registry");
    while (tail->terms.size() < static_cast<std::size_t>(n)) {
        const Object last = tail->terms.back();
        tail->conflations.push_back({Piece{Piece::Kind::Split, -1, 0, last}});
        tail->terms.back() = last;
        tail->terms.push_back(Object{});
    }
    rec.tail = *tail;
    rec.terms = {x0, x1};
    rec.terms.insert(rec.terms.end(), rec.tail.terms.begin(), rec.tail.terms.end());

    const K0Instance sp = k0_split(t, x);
    rec.alternating_sum = IntVector(x.size());
    for (std::size_t i = 0; i < rec.terms.size(); ++i) {
        IntVector v = sp.class_of(rec.terms[i]);
        for (std::size_t k = 0; k < v.size(); ++k) rec.alternating_sum[k] += (i % 2 ? -v[k] : v[k]);
    }
    return rec;
}

} // namespace

AngleRecord higher_angles(const CatTable& t, const Subcat& x, int n, const std::vector<G1Piece>& g1) {
    check_setting(t, x, n);
    return build_angle(t, x, n, g1);
}

HigherK0Report thm_higher_k0_check(const CatTable& t, const Subcat& x, int n) {
    check_setting(t, x, n);
    HigherK0Report rep;
    const std::size_t m = x.size();
    IntMatrix iota(t.size(), m);
    for (std::size_t j = 0; j < m; ++j) iota(static_cast<std::size_t>(x[j]), j) = 1;
    const GroupHom rho(GroupPresentation::free(m), k0_full(t).group, iota);
    const Lattice ker = kernel_subgroup(rho).lattice();
    rep.kernel = "rank " + std::to_string(ker.rank());

    std::vector<G1Piece> options;
    for (int a : x) {
        options.push_back({a, -1, 1});
        options.push_back({-1, a, 1});
        for (int b : x)
            if (t.homdim(a, b)) options.push_back({a, b, 1});
    }
    std::vector<IntVector> sums;
    auto consider = [&](const std::vector<G1Piece>& g1) {
        AngleRecord rec;
        try {
            rec = build_angle(t, x, n, g1);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotRealizable) throw;
            ++rep.unrealizable;
            return;
        }
        ++rep.angles;
        if (!ker.contains(rec.alternating_sum)) ++rep.sound_violations;
        sums.push_back(std::move(rec.alternating_sum));
    };
    for (std::size_t i = 0; i < options.size(); ++i) {
        consider({options[i]});
        for (std::size_t j = i; j < options.size(); ++j) consider({options[i], options[j]});
    }

    const Lattice generated = Lattice::span(m, sums);
    rep.generated_equals_kernel = rep.sound_violations == 0 && generated == ker;
    if (rep.sound_violations) {
        rep.gap = "undefined";
        return rep;
    }
    // generated inside ker, written in the basis of ker
    std::vector<IntVector> cols = ker.basis();
    const IntMatrix basis = IntMatrix::from_columns(cols, m);
    std::vector<IntVector> rows;
    for (const auto& g : generated.basis()) {
        IntVector c;
        if (!integer_solve(basis, g, c)) throw Error(ErrorKind::Refutation, "generated lattice escapes the kernel");
        rows.push_back(std::move(c));
    }
    rep.gap = GroupPresentation(ker.rank(), IntMatrix::from_rows(rows, ker.rank())).describe();
    return rep;
}

} // namespace exkat
