#include "exkat/cattable.hpp"
#include "exkat/cattable_json.hpp"
#include "exkat/error.hpp"
#include "exkat/linalg.hpp"
#include "exkat/typea.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace exkat;

namespace {

QVector qv(std::initializer_list<long> xs) {
    QVector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

bool same_triangle(const Triangle& x, const Triangle& y) {
    return x.a == y.a && x.m == y.m && x.b == y.b && x.f == y.f && x.g == y.g && x.h == y.h;
}

} // namespace

TEST_CASE("objects are multisets of indecomposables") {
    const Object x = Object::of(2) + Object::of(0) + Object::of(2);
    CHECK(x.size() == 3);
    CHECK(x.multiplicity(2) == 2);
    CHECK(x.copies() == std::vector<int>{0, 2, 2});
    CHECK(x == Object::from_copies({2, 0, 2}));
    CHECK(Object{}.is_zero());
    CHECK_FALSE(x.contains(1));
}

TEST_CASE("rational row reduction") {
    const QMatrix a = QMatrix::from_rows({qv({1, 2, 3}), qv({2, 4, 6}), qv({0, 1, 1})}, 3);
    CHECK(a.rank() == 2);
    const auto ker = a.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(is_zero(a.apply(ker[0])));
    CHECK(Subspace::span(3, {qv({1, 0, 0}), qv({2, 0, 0})}).dim() == 1);
    CHECK(Subspace::span(2, {qv({1, 1})}) == Subspace::span(2, {qv({3, 3})}));
}

TEST_CASE("subspace dimension formula on random spans") {
    oracle::Gen g(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto rnd = [&] {
            std::vector<QVector> vs;
            for (int k = g.range(0, 3); k > 0; --k) {
                QVector v;
                for (int i = 0; i < 4; ++i) v.push_back(Rational(g.range(-2, 2)));
                vs.push_back(v);
            }
            return Subspace::span(4, vs);
        };
        const Subspace u = rnd(), w = rnd();
        REQUIRE(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
        REQUIRE(u.sum(w).contains(u));
        REQUIRE(u.contains(u.intersect(w)));
        QMatrix a(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = g.range(-2, 2);
        const Subspace target = Subspace::span(2, {qv({1, 0})});
        const Subspace pre = preimage(a, target);
        for (const auto& b : pre.basis()) REQUIRE(target.contains(a.apply(b)));
    }
}

TEST_CASE("generated tables satisfy the category axioms") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const CatTable t = gen_cluster_A(n);
        ValidateOptions opts;
        opts.require_unit_constants = true;
        const ValidationReport r = validate(t, opts);
        for (const auto& i : r.issues) CAPTURE(i.message);
        CHECK(r.ok());
        CHECK(r.issues.empty());
    }
}

TEST_CASE("table JSON round trip is canonical") {
    const CatTable t = gen_cluster_A(3);
    const std::string dump = dump_table(t);
    const CatTable back = table_from_json(nlohmann::json::parse(dump));
    CHECK(dump_table(back) == dump);
    CHECK(table_digest(back) == table_digest(t));
    CHECK(hex64(table_digest(t)).size() == 16);
    CHECK(table_digest(gen_cluster_A(2)) != table_digest(t));

    auto j = nlohmann::json::parse(dump);
    j["extra"] = 1;
    CHECK_THROWS_AS(table_from_json(j), Error);
    j = nlohmann::json::parse(dump);
    j["field"] = "R";
    CHECK_THROWS_AS(table_from_json(j), Error);
    j = nlohmann::json::parse(dump);
    j.erase("homdim");
    CHECK_THROWS_AS(table_from_json(j), Error);
}

TEST_CASE("rational strings") {
    CHECK(rational_string(parse_rational(nlohmann::json("-3/6"))) == "-1/2");
    CHECK(rational_string(Rational(4)) == "4/1");
    CHECK(parse_rational(nlohmann::json("6/4")) == Rational(3, 2));
    CHECK(parse_rational(nlohmann::json(-7)) == Rational(-7));
    CHECK_THROWS_AS(parse_rational(nlohmann::json("1/0")), Error);
    CHECK_THROWS_AS(parse_rational(nlohmann::json("x")), Error);
}

TEST_CASE("a corrupted structure constant is caught with an associativity witness") {
    CatTable t = gen_cluster_A(2);
    t.set_comp(t.index_of("13"), t.index_of("13"), t.index_of("35"), 0, 0, 0, Rational(5));
    const ValidationReport r = validate(t);
    CHECK_FALSE(r.ok());
    CHECK(std::any_of(r.issues.begin(), r.issues.end(),
                      [](const ValidationIssue& i) { return i.kind == "associativity"; }));
}

TEST_CASE("three rotations are the suspension with a sign") {
    for (int n = 1; n <= 4; ++n) {
        const CatTable t = gen_cluster_A(n);
        for (const auto& rec : t.triangles()) {
            const Triangle tri = from_record(t, rec);
            Triangle r = tri;
            for (int k = 0; k < 3; ++k) {
                r = rotate_triangle(t, r);
                REQUIRE(locally_consistent(t, r));
            }
            Triangle s = suspend_triangle(t, tri, 1);
            s.f = scale(s.f, Rational(-1));
            s.g = scale(s.g, Rational(-1));
            s.h = scale(s.h, Rational(-1));
            REQUIRE(same_triangle(r, s));
        }
    }
}

TEST_CASE("morphism calculus") {
    const CatTable t = gen_cluster_A(3);
    for (int a = 0; a < static_cast<int>(t.size()); ++a)
        for (int b = 0; b < static_cast<int>(t.size()); ++b) {
            if (!t.homdim(a, b)) continue;
            const MorCoords f = basis_mor(t, a, b);
            REQUIRE(compose(t, identity_mor(t, Object::of(a)), f) == f);
            REQUIRE(compose(t, f, identity_mor(t, Object::of(b))) == f);
            REQUIRE(suspend(t, suspend(t, f, 2), -2) == f);
            REQUIRE(add(f, scale(f, Rational(-1))).is_zero());
        }
    const Object x = Object::of(0) + Object::of(1);
    const MorCoords id = identity_mor(t, x);
    CHECK(id.flat().size() == hom_dim(t, x, x));
    CHECK(mor_from_flat(t, x, x, id.flat()) == id);
    CHECK(direct_sum(t, identity_mor(t, Object::of(0)), identity_mor(t, Object::of(1))) == id);
}

TEST_CASE("direct sums of triangles stay consistent") {
    const CatTable t = gen_cluster_A(3);
    const auto& trs = t.triangles();
    for (std::size_t i = 0; i < trs.size(); i += 7)
        for (std::size_t j = 0; j < trs.size(); j += 11)
            REQUIRE(locally_consistent(t, direct_sum(t, from_record(t, trs[i]), from_record(t, trs[j]))));
}

TEST_CASE("ideals through a subcategory") {
    const CatTable t = gen_cluster_A(3);
    const int m = static_cast<int>(t.size());
    for (int s = 0; s < m; ++s)
        for (int u = 0; u < m; ++u) {
            REQUIRE(ideal(t, s, u, {s}) == Subspace::full(t.homdim(s, u)));
            REQUIRE(ideal(t, s, u, {}).dim() == 0);
        }
}

TEST_CASE("opposite table") {
    const CatTable t = gen_cluster_A(3);
    const CatTable op = opposite(t);
    CHECK(validate(op).ok());
    CHECK(op.triangles().size() == t.triangles().size());
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
        CHECK(op.susp(a) == t.susp_inv(a));
        for (int b = 0; b < static_cast<int>(t.size()); ++b) CHECK(op.homdim(a, b) == t.homdim(b, a));
    }
    CHECK(dump_table(opposite(op)) == dump_table(t));
}

TEST_CASE("labels") {
    const CatTable t = gen_cluster_A(2);
    CHECK(object_label(t, Object{}) == "0");
    CHECK(object_label(t, Object::of(t.index_of("24")) + Object::of(t.index_of("13"), 2)) == "2*13 + 24");
}
