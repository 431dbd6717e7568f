#include "exkat/error.hpp"
#include "exkat/k0lab.hpp"
#include "exkat/typea.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace exkat;

namespace {

Subcat ids(const CatTable& t, std::initializer_list<const char*> names) {
    std::vector<int> v;
    for (auto n : names) v.push_back(t.index_of(n));
    return make_subcat(v);
}

IntVector vec(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.push_back(x);
    return v;
}

// Coordinates over X given by names, in the sorted order used by Subcat.
IntVector on(const CatTable& t, const Subcat& x, std::initializer_list<std::pair<const char*, long>> entries) {
    IntVector v(x.size());
    for (auto [name, c] : entries) {
        const auto it = std::find(x.begin(), x.end(), t.index_of(name));
        v[static_cast<std::size_t>(it - x.begin())] += c;
    }
    return v;
}

int record(const CatTable& t, const char* a, const char* b) {
    for (std::size_t r = 0; r < t.triangles().size(); ++r)
        if (t.triangles()[r].a == t.index_of(a) && t.triangles()[r].b == t.index_of(b)) return static_cast<int>(r);
    return -1;
}

Object obj(const CatTable& t, const char* name) { return Object::of(t.index_of(name)); }

} // namespace

TEST_CASE("split Grothendieck groups are free") {
    const CatTable t = gen_cluster_A(2);
    CHECK(k0_split(t, ids(t, {"14", "13"})).group.describe() == "Z^2");
    CHECK(k0_split(t, all_indecs(t)).group.describe() == "Z^5");
    CHECK(k0_split(t, {}).group.is_trivial());
}

TEST_CASE("Grothendieck groups of structures on the pentagon") {
    const CatTable t = gen_cluster_A(2);
    const K0Instance zero = k0(t, relative_ext(t, Variant::Zero, {}));
    CHECK(zero.group.same_ambient(k0_split(t, all_indecs(t)).group));
    CHECK(zero.relation_triangles.empty());

    const K0Instance full = k0_full(t);
    CHECK(full.relation_triangles.size() == 10);
    CHECK(oracle::shape_of(full.group) == oracle::cokernel_shape(5, full.group.relations()));
    CHECK(full.group.is_trivial());

    const Subcat x = ids(t, {"14", "13"});
    const K0Instance xr = k0(t, relative_ext(t, Variant::XRight, x));
    CHECK(xr.group.describe() == "Z^2");
    for (int c = 0; c < 5; ++c) {
        bool hit = false;
        for (long p = -2; p <= 2 && !hit; ++p)
            for (long q = -2; q <= 2 && !hit; ++q) {
                IntVector v(5);
                v[static_cast<std::size_t>(t.index_of("14"))] = p;
                v[static_cast<std::size_t>(t.index_of("13"))] = q;
                hit = xr.group.elements_equal(v, unit_vector(5, static_cast<std::size_t>(c)));
            }
        CHECK(hit);
    }
}

TEST_CASE("right and left indices on the pentagon") {
    const CatTable t = gen_cluster_A(2);
    const Subcat n = suspend(t, ids(t, {"14", "13"}), 1);
    const IndexClass one = index_right(t, n, obj(t, "35"));
    IntVector expected(5);
    expected[static_cast<std::size_t>(t.index_of("13"))] = 1;
    expected[static_cast<std::size_t>(t.index_of("14"))] = -1;
    CHECK(one.k0.group.elements_equal(one.coords, expected));
    CHECK(index_right(t, n, Object{}).coords == IntVector(5));
    CHECK(index_right(t, n, obj(t, "14")).coords == unit_vector(5, static_cast<std::size_t>(t.index_of("14"))));
    CHECK(index_left(t, n, obj(t, "14") + obj(t, "14")).coords[static_cast<std::size_t>(t.index_of("14"))] == 2);
}

TEST_CASE("index isomorphism and index vectors") {
    const CatTable t = gen_cluster_A(2);
    const Subcat x = ids(t, {"14", "13"});
    const IndexIsoReport rep = index_iso_check(t, x);
    CHECK(rep.bijective);
    CHECK(rep.target == "Z^2");
    CHECK(rep.index_vectors[static_cast<std::size_t>(t.index_of("35"))] == on(t, x, {{"14", -1}, {"13", 1}}));
    CHECK(rep.index_vectors[static_cast<std::size_t>(t.index_of("14"))] == on(t, x, {{"14", 1}}));

    const IndexIsoReport everything = index_iso_check(t, all_indecs(t));
    CHECK(everything.map.is_identity());
    CHECK(everything.target == "Z^5");

    CHECK_THROWS_AS(index_iso_check(t, ids(t, {"14"})), Error);

    const CatTable h = gen_cluster_A(3);
    for (const auto& tri : enumerate_triangulations(3)) {
        const IndexIsoReport r = index_iso_check(h, triangulation_indices(h, tri));
        CHECK(r.target == "Z^3");
    }
}

TEST_CASE("resolutions") {
    const CatTable t = gen_cluster_A(2);
    const Subcat x = ids(t, {"14", "13"});
    const int r = record(t, "14", "35");
    REQUIRE(r >= 0);
    REQUIRE(t.triangles()[static_cast<std::size_t>(r)].mid == obj(t, "13"));
    Resolution fixture{obj(t, "35"), {obj(t, "13"), obj(t, "14")}, {{Piece{Piece::Kind::Registry, r, 0, {}}}}};
    const ResolutionCheck ok = resolution_verify(t, x, fixture);
    CHECK(ok.ok);
    CHECK(ok.alternating_sum == on(t, x, {{"14", -1}, {"13", 1}}));
    CHECK(ok.alternating_sum == ok.index_vector);

    CHECK(resolution_verify(t, x, Resolution{obj(t, "14"), {obj(t, "14")}, {}}).ok);

    Resolution corrupted = fixture;
    corrupted.terms[0] = obj(t, "14");
    const ResolutionCheck bad = resolution_verify(t, x, corrupted);
    CHECK_FALSE(bad.ok);
    CHECK(bad.reason.find("middle term") != std::string::npos);

    Resolution short_one = fixture;
    short_one.terms.pop_back();
    CHECK_THROWS_AS(resolution_verify(t, x, short_one), Error);
    Resolution bad_index = fixture;
    bad_index.conflations[0][0].triangle = 99;
    CHECK_THROWS_AS(resolution_verify(t, x, bad_index), Error);

    for (int c = 0; c < 5; ++c) {
        auto found = find_resolution(t, x, Object::of(c));
        REQUIRE(found);
        REQUIRE(resolution_verify(t, x, *found).ok);
    }
    auto sum = find_resolution(t, x, obj(t, "35") + obj(t, "24") + obj(t, "13"));
    REQUIRE(sum);
    CHECK(resolution_verify(t, x, *sum).ok);
}

TEST_CASE("hexagon fixture resolution") {
    const CatTable t = gen_cluster_A(3);
    const Subcat x = ids(t, {"13", "35", "15"});
    const int r = record(t, "35", "14");
    REQUIRE(r >= 0);
    REQUIRE(t.triangles()[static_cast<std::size_t>(r)].mid == obj(t, "15"));
    const Resolution res{obj(t, "14"), {obj(t, "15"), obj(t, "35")}, {{Piece{Piece::Kind::Registry, r, 0, {}}}}};
    const ResolutionCheck chk = resolution_verify(t, x, res);
    CHECK(chk.ok);
    CHECK(chk.alternating_sum == on(t, x, {{"15", 1}, {"35", -1}}));
}

TEST_CASE("dimension vectors") {
    const CatTable t = gen_cluster_A(2);
    const Subcat x = ids(t, {"14", "13"});
    CHECK(qclass(t, x, obj(t, "13")) == on(t, x, {{"14", 1}, {"13", 1}}));
    CHECK(qclass(t, x, obj(t, "14")) == on(t, x, {{"14", 1}}));
    CHECK(qclass(t, x, obj(t, "25")) == IntVector(2));
    CHECK(im_qclass(t, x, basis_mor(t, t.index_of("13"), t.index_of("35"))) == on(t, x, {{"13", 1}}));
    CHECK(im_qclass(t, x, zero_mor(t, obj(t, "13"), obj(t, "35"))) == IntVector(2));
}

TEST_CASE("theta on the pentagon") {
    const CatTable t = gen_cluster_A(2);
    const RelativeK0 ctx(t, ids(t, {"14", "13"}));
    const GroupHom& th = ctx.theta_right();
    for (int c = 0; c < 5; ++c)
        REQUIRE(ctx.k0_right().group.elements_equal(
            th.apply(qclass(t, ctx.x(), Object::of(c))),
            ctx.k0_right().class_of(Object::of(c) + Object::of(t.susp(c, -1)))));
    CHECK_NOTHROW(ctx.theta_left());
    CHECK_THROWS_AS(RelativeK0(t, ids(t, {"13", "24"})), Error);
}

TEST_CASE("theta is consistent on every rigid subcategory") {
    for (int n = 1; n <= 3; ++n) {
        const CatTable t = gen_cluster_A(n);
        const int m = static_cast<int>(t.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            Subcat x;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) x.push_back(i);
            if (!is_rigid(t, x)) continue;
            const RelativeK0 ctx(t, x);
            REQUIRE_NOTHROW(ctx.theta_right());
            REQUIRE_NOTHROW(ctx.theta_left());
        }
    }
}

TEST_CASE("additivity with and without error term") {
    const CatTable t = gen_cluster_A(2);
    const RelativeK0 ctx(t, ids(t, {"14", "13"}));

    const Triangle base = from_record(t, t.triangles()[static_cast<std::size_t>(record(t, "24", "13"))]);
    REQUIRE(base.m == obj(t, "14"));
    const AdditivityResult err = additivity_check(ctx, base, Side::Right);
    CHECK(err.ok);
    CHECK(err.image == on(t, ctx.x(), {{"13", 1}}));
    CHECK_FALSE(ctx.k0_right().group.is_relation(err.rhs));

    const Triangle rotated = rotate_triangle(t, base);
    const AdditivityResult exact = additivity_check(ctx, rotated, Side::Right);
    CHECK(exact.ok);
    CHECK(exact.image == IntVector(2));
    CHECK(ctx.k0_right().group.is_relation(exact.lhs));

    const Object a = obj(t, "25"), c = obj(t, "13");
    const Triangle split{a, a + c, c, direct_sum(t, identity_mor(t, a), zero_mor(t, Object{}, c)),
                         direct_sum(t, zero_mor(t, a, Object{}), identity_mor(t, c)), zero_mor(t, c, suspend(t, a, 1))};
    for (Side side : {Side::Right, Side::Left}) {
        const AdditivityResult s = additivity_check(ctx, split, side);
        CHECK(s.ok);
        CHECK(ctx.k0_right().group.is_relation(s.lhs));
    }
}

TEST_CASE("exactness, diagram and Fedele check on the pentagon and hexagon") {
    const CatTable t = gen_cluster_A(2);
    const RelativeK0 ctx(t, ids(t, {"14", "13"}));
    CHECK(exactness_check(ctx).ok());
    CHECK(diagram_report(ctx).ok());
    CHECK(fedele_fx_check(ctx).ok);

    const CatTable h = gen_cluster_A(3);
    for (const auto& tri : enumerate_triangulations(3)) {
        const RelativeK0 c(h, triangulation_indices(h, tri));
        REQUIRE(exactness_check(c).ok());
        REQUIRE(diagram_report(c).ok());
        REQUIRE(fedele_fx_check(c).ok);
    }
    const CatTable sq = gen_cluster_A(1);
    for (const auto& tri : enumerate_triangulations(1)) CHECK(fedele_fx_check(sq, triangulation_indices(sq, tri)));
}

TEST_CASE("empty X degenerates to the ambient group") {
    const CatTable t = gen_cluster_A(2);
    const RelativeK0 ctx(t, {});
    CHECK(ctx.n() == all_indecs(t));
    CHECK(exactness_check(ctx).ok());
    CHECK(ctx.theta_right().source().n_gens() == 0);
}

TEST_CASE("left indices are right indices on the opposite table") {
    const CatTable t = gen_cluster_A(2);
    const CatTable op = opposite(t);
    for (int mask = 0; mask < 32; ++mask) {
        Subcat n;
        for (int i = 0; i < 5; ++i)
            if (mask >> i & 1) n.push_back(i);
        const K0Instance left = k0(t, relative_ext(t, Variant::NLeft, n));
        const K0Instance right = k0(op, relative_ext(op, Variant::NRight, n));
        REQUIRE(left.group.same_ambient(right.group));
        for (int c = 0; c < 5; ++c)
            REQUIRE(index_left(t, n, Object::of(c)).coords == index_right(op, n, Object::of(c)).coords);
    }
}

TEST_CASE("higher angles on the hexagon") {
    const CatTable t = gen_cluster_A(3);
    const Subcat x = ids(t, {"13", "35", "15"});
    REQUIRE(suspend(t, x, 2) == x);
    const int i13 = t.index_of("13"), i35 = t.index_of("35");

    const AngleRecord a = higher_angles(t, x, 2, {G1Piece{i13, i35, 1}});
    CHECK(a.cocone == obj(t, "14"));
    CHECK(a.cone == obj(t, "25"));
    REQUIRE(a.terms.size() == 4);
    CHECK(a.terms[0] == obj(t, "35"));
    CHECK(a.terms[1] == obj(t, "13"));
    CHECK(a.terms[2] == obj(t, "15"));
    CHECK(a.terms[3] == obj(t, "35"));
    for (const auto& term : a.terms) CHECK(in_add(x, term));

    const AngleRecord id = higher_angles(t, x, 2, {G1Piece{i13, i13, 1}});
    CHECK(id.cocone.is_zero());
    CHECK(id.alternating_sum == IntVector(3));

    const AngleRecord zero = higher_angles(t, x, 2, {G1Piece{i13, i35, 0}});
    CHECK(zero.cocone == obj(t, "13") + obj(t, "24"));
    CHECK(zero.alternating_sum == on(t, x, {{"35", 1}, {"13", -1}}));
    CHECK(k0_full(t).group.elements_equal(k0_full(t).class_of(obj(t, "35")), k0_full(t).class_of(obj(t, "13"))));
    CHECK(zero.terms[1] == obj(t, "13"));
    CHECK(zero.terms[0] == obj(t, "35"));

    CHECK_THROWS_WITH_AS(higher_angles(t, x, 2, {G1Piece{t.index_of("14"), i35, 1}}),
                         doctest::Contains("outside supported morphism class"), Error);
    CHECK_THROWS_AS(higher_angles(t, ids(t, {"13", "14", "15"}), 2, {}), Error);

    const HigherK0Report rep = thm_higher_k0_check(t, x, 2);
    CHECK(rep.angles > 0);
    CHECK(rep.sound_violations == 0);
    CHECK(rep.generated_equals_kernel);
    CHECK(rep.gap == "0");
}

TEST_CASE("sound direction for sums of canonical maps") {
    const CatTable t = gen_cluster_A(3);
    const Subcat x = ids(t, {"13", "35", "15"});
    IntMatrix iota(t.size(), 3);
    for (std::size_t j = 0; j < 3; ++j) iota(static_cast<std::size_t>(x[j]), j) = 1;
    const Lattice ker = kernel_subgroup(GroupHom(GroupPresentation::free(3), k0_full(t).group, iota)).lattice();
    oracle::Gen g(2026);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<G1Piece> g1;
        for (int k = g.range(1, 3); k > 0; --k) {
            const int a = x[static_cast<std::size_t>(g.range(0, 2))], b = x[static_cast<std::size_t>(g.range(0, 2))];
            const int kind = g.range(0, 3);
            if (kind == 0) g1.push_back({a, -1, 1});
            else if (kind == 1) g1.push_back({-1, b, 1});
            else if (t.homdim(a, b)) g1.push_back({a, b, kind == 2 ? Rational(1) : Rational(0)});
            else g1.push_back({a, b, 0});
        }
        const AngleRecord rec = higher_angles(t, x, 2, g1);
        REQUIRE(ker.contains(rec.alternating_sum));
    }
}
