#include "exkat/cattable.hpp"

#include "exkat/error.hpp"

#include <algorithm>
#include <map>

namespace exkat {

// ---------------------------------------------------------------- Object

Object Object::of(int index, int mult) {
    Object o;
    if (mult > 0) o.parts_.push_back({index, mult});
    return o;
}

Object Object::from_copies(std::vector<int> copies) {
    std::sort(copies.begin(), copies.end());
    Object o;
    for (int c : copies) {
        if (!o.parts_.empty() && o.parts_.back().first == c)
            ++o.parts_.back().second;
        else
            o.parts_.push_back({c, 1});
    }
    return o;
}

std::vector<int> Object::copies() const {
    std::vector<int> out;
    for (auto [i, m] : parts_)
        for (int k = 0; k < m; ++k) out.push_back(i);
    return out;
}

std::size_t Object::size() const {
    std::size_t s = 0;
    for (auto [i, m] : parts_) s += static_cast<std::size_t>(m);
    return s;
}

int Object::multiplicity(int index) const {
    for (auto [i, m] : parts_)
        if (i == index) return m;
    return 0;
}

Object Object::operator+(const Object& other) const {
    auto c = copies();
    auto d = other.copies();
    c.insert(c.end(), d.begin(), d.end());
    return from_copies(std::move(c));
}

// ---------------------------------------------------------------- MorCoords

QVector MorCoords::flat() const {
    QVector out;
    for (const auto& row : blocks)
        for (const auto& blk : row) out.insert(out.end(), blk.begin(), blk.end());
    return out;
}

bool MorCoords::is_zero() const {
    for (const auto& row : blocks)
        for (const auto& blk : row)
            if (!exkat::is_zero(blk)) return false;
    return true;
}

const QVector& component(const MorCoords& f, std::size_t s, std::size_t u) { return f.blocks.at(s).at(u); }

// ---------------------------------------------------------------- CatTable

CatTable::CatTable(std::vector<Indec> indecs) : indecs_(std::move(indecs)) {
    const std::size_t n = indecs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!ids_.emplace(indecs_[i].id, static_cast<int>(i)).second)
            throw Error(ErrorKind::InvalidInput, "duplicate indecomposable id '" + indecs_[i].id + "'");
    }
    homdim_.assign(n * n, 0);
    comp_.assign(n * n * n, {});
    action_.assign(n * n, {});
    susp_.resize(n);
    susp_inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) susp_[i] = susp_inv_[i] = static_cast<int>(i);
}

int CatTable::find(const std::string& id) const {
    auto it = ids_.find(id);
    return it == ids_.end() ? -1 : it->second;
}

int CatTable::index_of(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw Error(ErrorKind::InvalidInput, "unknown indecomposable '" + id + "'");
    return i;
}

void CatTable::check(int a) const {
    if (a < 0 || static_cast<std::size_t>(a) >= indecs_.size())
        throw Error(ErrorKind::OutOfBounds, "indecomposable index " + std::to_string(a));
}

const Rational& CatTable::comp(int a, int b, int c, std::size_t i, std::size_t j, std::size_t k) const {
    static const Rational zero(0);
    const QVector& v = comp_[idx3(a, b, c)];
    if (v.empty()) return zero;
    return v[(i * homdim(a, b) + j) * homdim(a, c) + k];
}

int CatTable::susp(int a, int k) const {
    for (; k > 0; --k) a = susp(a);
    for (; k < 0; ++k) a = susp_inv(a);
    return a;
}

void CatTable::set_homdim(int a, int b, std::size_t d) {
    check(a);
    check(b);
    homdim_[idx2(a, b)] = d;
    action_[idx2(a, b)].assign(d, Rational(1));
}

void CatTable::resize_comp(int a, int b, int c) {
    std::size_t want = homdim(b, c) * homdim(a, b) * homdim(a, c);
    QVector& v = comp_[idx3(a, b, c)];
    if (v.size() != want) v.assign(want, Rational(0));
}

void CatTable::set_comp(int a, int b, int c, QVector constants) {
    check(a);
    check(b);
    check(c);
    std::size_t want = homdim(b, c) * homdim(a, b) * homdim(a, c);
    if (constants.size() != want)
        throw Error(ErrorKind::ShapeMismatch, "composition constants for (" + indecs_[static_cast<std::size_t>(a)].id +
                                                  "," + indecs_[static_cast<std::size_t>(b)].id + "," +
                                                  indecs_[static_cast<std::size_t>(c)].id + ") have length " +
                                                  std::to_string(constants.size()) + ", expected " +
                                                  std::to_string(want));
    comp_[idx3(a, b, c)] = std::move(constants);
}

void CatTable::set_comp(int a, int b, int c, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    resize_comp(a, b, c);
    QVector& vec = comp_[idx3(a, b, c)];
    std::size_t pos = (i * homdim(a, b) + j) * homdim(a, c) + k;
    if (pos >= vec.size()) throw Error(ErrorKind::OutOfBounds, "composition constant index");
    vec[pos] = v;
}

void CatTable::set_susp(std::vector<int> perm) {
    const std::size_t n = indecs_.size();
    if (perm.size() != n) throw Error(ErrorKind::InvalidInput, "suspension permutation has the wrong length");
    std::vector<int> inv(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        check(perm[i]);
        if (inv[static_cast<std::size_t>(perm[i])] != -1)
            throw Error(ErrorKind::InvalidInput, "suspension is not a permutation");
        inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    }
    susp_ = std::move(perm);
    susp_inv_ = std::move(inv);
}

void CatTable::set_basis_action(int a, int b, std::size_t k, const Rational& v) {
    check(a);
    check(b);
    auto& vec = action_[idx2(a, b)];
    if (k >= vec.size()) throw Error(ErrorKind::OutOfBounds, "basis action index");
    vec[k] = v;
}

void CatTable::init_identity_constants() {
    const int n = static_cast<int>(size());
    for (int a = 0; a < n; ++a) {
        if (homdim(a, a) == 0) continue;
        for (int c = 0; c < n; ++c)
            for (std::size_t i = 0; i < homdim(a, c); ++i) set_comp(a, a, c, i, 0, i, 1);
        for (int b = 0; b < n; ++b) {
            if (homdim(b, b) == 0) continue;
            for (std::size_t j = 0; j < homdim(a, b); ++j) set_comp(a, b, b, 0, j, j, 1);
        }
    }
}

// ---------------------------------------------------------------- morphisms

std::size_t hom_dim(const CatTable& t, const Object& a, const Object& b) {
    std::size_t d = 0;
    for (auto [i, m] : a.parts())
        for (auto [j, k] : b.parts()) d += static_cast<std::size_t>(m * k) * t.homdim(i, j);
    return d;
}

Object suspend(const CatTable& t, const Object& x, int k) {
    std::vector<int> c;
    for (int i : x.copies()) c.push_back(t.susp(i, k));
    return Object::from_copies(std::move(c));
}

MorCoords zero_mor(const CatTable& t, const Object& source, const Object& target) {
    MorCoords f{source, target, {}};
    auto cs = source.copies(), ct = target.copies();
    f.blocks.resize(cs.size());
    for (std::size_t s = 0; s < cs.size(); ++s) {
        f.blocks[s].resize(ct.size());
        for (std::size_t u = 0; u < ct.size(); ++u) f.blocks[s][u].assign(t.homdim(cs[s], ct[u]), Rational(0));
    }
    return f;
}

MorCoords identity_mor(const CatTable& t, const Object& x) {
    MorCoords f = zero_mor(t, x, x);
    for (std::size_t s = 0; s < f.blocks.size(); ++s) {
        if (f.blocks[s][s].empty()) throw Error(ErrorKind::InvalidInput, "indecomposable without identity");
        f.blocks[s][s][0] = 1;
    }
    return f;
}

MorCoords basis_mor(const CatTable& t, int a, int b, std::size_t k) {
    MorCoords f = zero_mor(t, Object::of(a), Object::of(b));
    if (k >= f.blocks[0][0].size()) throw Error(ErrorKind::OutOfBounds, "basis index outside Hom space");
    f.blocks[0][0][k] = 1;
    return f;
}

MorCoords mor_from_flat(const CatTable& t, const Object& source, const Object& target, const QVector& flat) {
    MorCoords f = zero_mor(t, source, target);
    std::size_t pos = 0;
    for (auto& row : f.blocks)
        for (auto& blk : row)
            for (auto& x : blk) {
                if (pos >= flat.size()) throw Error(ErrorKind::ShapeMismatch, "too few morphism coordinates");
                x = flat[pos++];
            }
    if (pos != flat.size()) throw Error(ErrorKind::ShapeMismatch, "too many morphism coordinates");
    return f;
}

MorCoords compose(const CatTable& t, const MorCoords& f, const MorCoords& g) {
    if (!(f.target == g.source)) throw Error(ErrorKind::ShapeMismatch, "morphisms are not composable");
    MorCoords r = zero_mor(t, f.source, g.target);
    auto cs = f.source.copies(), cm = f.target.copies(), cu = g.target.copies();
    for (std::size_t s = 0; s < cs.size(); ++s)
        for (std::size_t u = 0; u < cu.size(); ++u) {
            QVector& out = r.blocks[s][u];
            if (out.empty()) continue;
            for (std::size_t m = 0; m < cm.size(); ++m) {
                const QVector& fv = f.blocks[s][m];
                const QVector& gv = g.blocks[m][u];
                for (std::size_t i = 0; i < gv.size(); ++i) {
                    if (sgn(gv[i]) == 0) continue;
                    for (std::size_t j = 0; j < fv.size(); ++j) {
                        if (sgn(fv[j]) == 0) continue;
                        Rational c = gv[i] * fv[j];
                        for (std::size_t k = 0; k < out.size(); ++k) {
                            const Rational& x = t.comp(cs[s], cm[m], cu[u], i, j, k);
                            if (sgn(x) != 0) out[k] += c * x;
                        }
                    }
                }
            }
        }
    return r;
}

namespace {

// Position of every copy of x inside x[k].
std::vector<std::size_t> suspended_positions(const CatTable& t, const Object& x, int k) {
    auto cx = x.copies();
    auto cy = suspend(t, x, k).copies();
    std::vector<std::size_t> pos(cx.size());
    std::map<int, std::size_t> used;
    for (std::size_t p = 0; p < cx.size(); ++p) {
        int img = t.susp(cx[p], k);
        std::size_t first = static_cast<std::size_t>(std::lower_bound(cy.begin(), cy.end(), img) - cy.begin());
        pos[p] = first + used[img]++;
    }
    return pos;
}

MorCoords suspend_once(const CatTable& t, const MorCoords& f, int dir) {
    Object s1 = suspend(t, f.source, dir), t1 = suspend(t, f.target, dir);
    MorCoords r = zero_mor(t, s1, t1);
    auto ps = suspended_positions(t, f.source, dir), pt = suspended_positions(t, f.target, dir);
    auto cs = f.source.copies(), ct = f.target.copies();
    for (std::size_t s = 0; s < cs.size(); ++s)
        for (std::size_t u = 0; u < ct.size(); ++u) {
            const QVector& v = f.blocks[s][u];
            QVector& out = r.blocks[ps[s]][pt[u]];
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (dir > 0)
                    out[k] = v[k] * t.basis_action(cs[s], ct[u], k);
                else
                    out[k] = v[k] / t.basis_action(t.susp_inv(cs[s]), t.susp_inv(ct[u]), k);
            }
        }
    return r;
}

} // namespace

MorCoords suspend(const CatTable& t, const MorCoords& f, int k) {
    MorCoords r = f;
    for (; k > 0; --k) r = suspend_once(t, r, 1);
    for (; k < 0; ++k) r = suspend_once(t, r, -1);
    return r;
}

MorCoords scale(const MorCoords& f, const Rational& c) {
    MorCoords r = f;
    for (auto& row : r.blocks)
        for (auto& blk : row)
            for (auto& x : blk) x *= c;
    return r;
}

MorCoords add(const MorCoords& f, const MorCoords& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw Error(ErrorKind::ShapeMismatch, "sum of morphisms with different shapes");
    MorCoords r = f;
    for (std::size_t s = 0; s < r.blocks.size(); ++s)
        for (std::size_t u = 0; u < r.blocks[s].size(); ++u)
            for (std::size_t k = 0; k < r.blocks[s][u].size(); ++k) r.blocks[s][u][k] += g.blocks[s][u][k];
    return r;
}

namespace {

// Positions of the copies of x and y inside x + y (x's copies first within each index).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> sum_positions(const Object& x, const Object& y) {
    auto cz = (x + y).copies();
    auto place = [&](const Object& o, bool second) {
        auto co = o.copies();
        std::vector<std::size_t> pos(co.size());
        std::map<int, std::size_t> used;
        for (std::size_t p = 0; p < co.size(); ++p) {
            std::size_t first = static_cast<std::size_t>(std::lower_bound(cz.begin(), cz.end(), co[p]) - cz.begin());
            std::size_t offset = second ? static_cast<std::size_t>(x.multiplicity(co[p])) : 0;
            pos[p] = first + offset + used[co[p]]++;
        }
        return pos;
    };
    return {place(x, false), place(y, true)};
}

} // namespace

MorCoords direct_sum(const CatTable& t, const MorCoords& f, const MorCoords& g) {
    MorCoords r = zero_mor(t, f.source + g.source, f.target + g.target);
    auto [fs, gs] = sum_positions(f.source, g.source);
    auto [ft, gt] = sum_positions(f.target, g.target);
    for (std::size_t s = 0; s < fs.size(); ++s)
        for (std::size_t u = 0; u < ft.size(); ++u) r.blocks[fs[s]][ft[u]] = f.blocks[s][u];
    for (std::size_t s = 0; s < gs.size(); ++s)
        for (std::size_t u = 0; u < gt.size(); ++u) r.blocks[gs[s]][gt[u]] = g.blocks[s][u];
    return r;
}

// ---------------------------------------------------------------- triangles

Triangle from_record(const CatTable& t, const TriangleRecord& tr) {
    Object a = Object::of(tr.a), b = Object::of(tr.b), a1 = Object::of(t.susp(tr.a));
    return Triangle{a,
                    tr.mid,
                    b,
                    mor_from_flat(t, a, tr.mid, tr.f),
                    mor_from_flat(t, tr.mid, b, tr.g),
                    mor_from_flat(t, b, a1, tr.delta)};
}

Triangle rotate_triangle(const CatTable& t, const Triangle& tr) {
    return Triangle{tr.m, tr.b, suspend(t, tr.a, 1), tr.g, tr.h, scale(suspend(t, tr.f, 1), Rational(-1))};
}

Triangle rotate_triangle(const CatTable& t, const TriangleRecord& tr) { return rotate_triangle(t, from_record(t, tr)); }

Triangle suspend_triangle(const CatTable& t, const Triangle& tr, int k) {
    return Triangle{suspend(t, tr.a, k), suspend(t, tr.m, k), suspend(t, tr.b, k),
                    suspend(t, tr.f, k), suspend(t, tr.g, k), suspend(t, tr.h, k)};
}

Triangle direct_sum(const CatTable& t, const Triangle& x, const Triangle& y) {
    return Triangle{x.a + y.a,
                    x.m + y.m,
                    x.b + y.b,
                    direct_sum(t, x.f, y.f),
                    direct_sum(t, x.g, y.g),
                    direct_sum(t, x.h, y.h)};
}

bool locally_consistent(const CatTable& t, const Triangle& tr, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(tr.f.source == tr.a) || !(tr.f.target == tr.m) || !(tr.g.source == tr.m) || !(tr.g.target == tr.b) ||
        !(tr.h.source == tr.b) || !(tr.h.target == suspend(t, tr.a, 1)))
        return fail("morphism shapes do not match the objects");
    if (!compose(t, tr.f, tr.g).is_zero()) return fail("g f is nonzero");
    if (!compose(t, tr.g, tr.h).is_zero()) return fail("h g is nonzero");
    if (!compose(t, tr.h, suspend(t, tr.f, 1)).is_zero()) return fail("f[1] h is nonzero");
    return true;
}

// ---------------------------------------------------------------- ideals

Subspace ideal(const CatTable& t, int s, int u, const std::vector<int>& w) {
    const std::size_t d = t.homdim(s, u);
    std::vector<QVector> vs;
    if (d == 0) return Subspace::zero(0);
    for (int x : w) {
        for (std::size_t i = 0; i < t.homdim(x, u); ++i)
            for (std::size_t j = 0; j < t.homdim(s, x); ++j) {
                QVector v(d);
                for (std::size_t k = 0; k < d; ++k) v[k] = t.comp(s, x, u, i, j, k);
                if (!is_zero(v)) vs.push_back(std::move(v));
            }
    }
    return Subspace::span(d, std::move(vs));
}

bool factors_through(const CatTable& t, const MorCoords& h, const std::vector<int>& w) {
    auto cs = h.source.copies(), cu = h.target.copies();
    for (std::size_t s = 0; s < cs.size(); ++s)
        for (std::size_t u = 0; u < cu.size(); ++u) {
            const QVector& v = h.blocks[s][u];
            if (is_zero(v)) continue;
            if (!ideal(t, cs[s], cu[u], w).contains(v)) return false;
        }
    return true;
}

// ---------------------------------------------------------------- validation

bool ValidationReport::ok() const {
    return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& i) { return !i.warning; });
}

std::string object_label(const CatTable& t, const Object& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (auto [i, m] : x.parts()) {
        if (!s.empty()) s += " + ";
        if (m > 1) s += std::to_string(m) + "*";
        s += t.indec(i).id;
    }
    return s;
}

ValidationReport validate(const CatTable& t, const ValidateOptions& opts) {
    ValidationReport rep;
    const int n = static_cast<int>(t.size());
    std::map<std::string, int> counts;
    auto issue = [&](const std::string& kind, const std::string& msg, bool warning = false) {
        if (counts[kind]++ < 8) rep.issues.push_back({kind, msg, warning});
    };
    auto id = [&](int a) { return t.indec(a).id; };

    for (int a = 0; a < n; ++a) {
        if (t.homdim(a, a) == 0) {
            issue("identity", "Hom(" + id(a) + "," + id(a) + ") is zero");
            continue;
        }
        for (int c = 0; c < n; ++c) {
            for (std::size_t i = 0; i < t.homdim(a, c); ++i)
                for (std::size_t k = 0; k < t.homdim(a, c); ++k)
                    if (t.comp(a, a, c, i, 0, k) != (i == k ? 1 : 0))
                        issue("identity", "basis element 0 of End(" + id(a) + ") is not a right unit on Hom(" +
                                              id(a) + "," + id(c) + ")");
            if (t.homdim(c, c) == 0) continue;
            for (std::size_t j = 0; j < t.homdim(a, c); ++j)
                for (std::size_t k = 0; k < t.homdim(a, c); ++k)
                    if (t.comp(a, c, c, 0, j, k) != (j == k ? 1 : 0))
                        issue("identity", "basis element 0 of End(" + id(c) + ") is not a left unit on Hom(" +
                                              id(a) + "," + id(c) + ")");
        }
    }

    // associativity on all basis triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::size_t dab = t.homdim(a, b);
            if (dab == 0) continue;
            for (int c = 0; c < n; ++c) {
                const std::size_t dbc = t.homdim(b, c), dac = t.homdim(a, c);
                if (dbc == 0) continue;
                for (int d = 0; d < n; ++d) {
                    const std::size_t dcd = t.homdim(c, d), dbd = t.homdim(b, d), dad = t.homdim(a, d);
                    if (dcd == 0) continue;
                    for (std::size_t f = 0; f < dab; ++f)
                        for (std::size_t g = 0; g < dbc; ++g)
                            for (std::size_t h = 0; h < dcd; ++h)
                                for (std::size_t k = 0; k < dad; ++k) {
                                    Rational left = 0, right = 0;
                                    for (std::size_t l = 0; l < dbd; ++l)
                                        left += t.comp(b, c, d, h, g, l) * t.comp(a, b, d, l, f, k);
                                    for (std::size_t m = 0; m < dac; ++m)
                                        right += t.comp(a, b, c, g, f, m) * t.comp(a, c, d, h, m, k);
                                    if (left != right)
                                        issue("associativity",
                                              "(h g) f != h (g f) on (" + id(a) + "," + id(b) + "," + id(c) + "," +
                                                  id(d) + ") basis (" + std::to_string(f) + "," +
                                                  std::to_string(g) + "," + std::to_string(h) + ") coordinate " +
                                                  std::to_string(k));
                                }
                }
            }
        }

    // suspension
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (t.homdim(a, b) != t.homdim(t.susp(a), t.susp(b)))
                issue("suspension", "dim Hom(" + id(a) + "," + id(b) + ") changes under [1]");
            for (std::size_t k = 0; k < t.homdim(a, b); ++k)
                if (sgn(t.basis_action(a, b, k)) == 0)
                    issue("suspension", "zero basis action on Hom(" + id(a) + "," + id(b) + ")");
        }
    if (counts["suspension"] == 0) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const int a1 = t.susp(a), b1 = t.susp(b), c1 = t.susp(c);
                    for (std::size_t i = 0; i < t.homdim(b, c); ++i)
                        for (std::size_t j = 0; j < t.homdim(a, b); ++j)
                            for (std::size_t k = 0; k < t.homdim(a, c); ++k) {
                                Rational lhs = t.basis_action(b, c, i) * t.basis_action(a, b, j) *
                                               t.comp(a1, b1, c1, i, j, k);
                                Rational rhs = t.comp(a, b, c, i, j, k) * t.basis_action(a, c, k);
                                if (lhs != rhs)
                                    issue("suspension", "[1] does not commute with composition on (" + id(a) + "," +
                                                            id(b) + "," + id(c) + ")");
                            }
                }
    }

    // registry
    std::vector<std::vector<QVector>> realized(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < t.triangles().size(); ++r) {
        const TriangleRecord& tr = t.triangles()[r];
        const std::string where = "triangle " + std::to_string(r) + " (" + (tr.a >= 0 && tr.a < n ? id(tr.a) : "?") +
                                  " -> " + (tr.b >= 0 && tr.b < n ? id(tr.b) : "?") + ")";
        if (tr.a < 0 || tr.a >= n || tr.b < 0 || tr.b >= n) {
            issue("triangle", where + ": endpoint out of range");
            continue;
        }
        Triangle tri;
        try {
            tri = from_record(t, tr);
        } catch (const Error& e) {
            issue("triangle", where + ": " + e.what());
            continue;
        }
        if (is_zero(tr.delta)) issue("triangle", where + ": zero extension class");
        if (tr.mid.is_zero()) {
            if (t.susp(tr.a) != tr.b) issue("triangle", where + ": zero middle term but b is not a[1]");
        } else if (tri.f.is_zero() || tri.g.is_zero()) {
            issue("triangle", where + ": zero morphism into or out of a nonzero middle term");
        }
        std::string why;
        if (!locally_consistent(t, tri, &why)) issue("triangle", where + ": " + why);
        realized[static_cast<std::size_t>(tr.b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(tr.a)]
            .push_back(tr.delta);
    }
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a) {
            const std::size_t d = t.homdim(c, t.susp(a));
            if (d == 0) continue;
            const auto& classes =
                realized[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)];
            if (classes.empty()) {
                issue("unrealized extension", "E(" + id(c) + "," + id(a) + ") is nonzero but no registered triangle " +
                                                  "realizes a class");
                continue;
            }
            if (d >= 2) {
                if (Subspace::span(d, classes).dim() < d)
                    issue("unrealized extension", "registered classes do not span E(" + id(c) + "," + id(a) + ")");
                issue("multidimensional extension",
                      "E(" + id(c) + "," + id(a) + ") has dimension " + std::to_string(d) +
                          "; registry completeness for K0 relations is not certified",
                      true);
            }
        }

    if (opts.require_unit_constants) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (const auto& x : t.comp(a, b, c))
                        if (x != 0 && x != 1 && x != -1)
                            issue("unit constants", "structure constant " + x.get_str() + " on (" + id(a) + "," +
                                                        id(b) + "," + id(c) + ")");
    }
    return rep;
}

CatTable opposite(const CatTable& t) {
    CatTable op(t.indecs());
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) op.set_homdim(a, b, t.homdim(b, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const std::size_t dbc = op.homdim(b, c), dab = op.homdim(a, b), dac = op.homdim(a, c);
                if (dbc == 0 || dab == 0 || dac == 0) continue;
                QVector v(dbc * dab * dac);
                for (std::size_t i = 0; i < dbc; ++i)
                    for (std::size_t j = 0; j < dab; ++j)
                        for (std::size_t k = 0; k < dac; ++k) v[(i * dab + j) * dac + k] = t.comp(c, b, a, j, i, k);
                op.set_comp(a, b, c, std::move(v));
            }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) perm[static_cast<std::size_t>(a)] = t.susp_inv(a);
    op.set_susp(perm);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < op.homdim(a, b); ++k)
                op.set_basis_action(a, b, k, 1 / t.basis_action(t.susp_inv(b), t.susp_inv(a), k));
    for (const auto& tr : t.triangles()) {
        MorCoords delta = mor_from_flat(t, Object::of(tr.b), Object::of(t.susp(tr.a)), tr.delta);
        op.add_triangle(TriangleRecord{tr.b, tr.mid, tr.a, tr.g, tr.f, suspend(t, delta, -1).flat()});
    }
    return op;
}

} // namespace exkat
