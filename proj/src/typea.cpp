#include "exkat/typea.hpp"

#include "exkat/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace exkat {

namespace {

int wrap(int x, int polygon) {
    int r = ((x % polygon) + polygon) % polygon;
    return r == 0 ? polygon : r;
}

Arc make_arc(int x, int y, int polygon) {
    x = wrap(x, polygon);
    y = wrap(y, polygon);
    return x < y ? Arc{x, y} : Arc{y, x};
}

bool is_side(int x, int y, int polygon) {
    if (x > y) std::swap(x, y);
    return y - x == 1 || (x == 1 && y == polygon);
}

// Mesh category of ZA_n: vertex (p, i) with 1 <= i <= n.
struct Vertex {
    int p, i;
};

struct Mesh {
    int n, polygon;

    Arc arc(const Vertex& v) const { return make_arc(-v.p - v.i, 1 - v.p, polygon); }
    Vertex lift(const Arc& a) const { return Vertex{1 - a.j, a.j - a.i - 1}; }

    bool in_rect(const Vertex& x, const Vertex& y) const {
        int b = y.p - x.p;
        int a = y.i - x.i + b;
        return b >= 0 && b <= x.i - 1 && a >= 0 && a <= n - x.i;
    }

    // Lifts of `target` inside the hammock starting at x.
    std::vector<Vertex> lifts_in_rect(const Vertex& x, const Arc& target) const {
        std::vector<Vertex> out;
        for (int b = 0; b <= x.i - 1; ++b)
            for (int a = 0; a <= n - x.i; ++a) {
                Vertex y{x.p + b, x.i + a - b};
                if (arc(y) == target) out.push_back(y);
            }
        return out;
    }
};

} // namespace

std::vector<Arc> polygon_arcs(int n) {
    const int polygon = n + 3;
    std::vector<Arc> out;
    for (int i = 1; i <= polygon; ++i)
        for (int j = i + 2; j <= polygon; ++j)
            if (!(i == 1 && j == polygon)) out.push_back({i, j});
    return out;
}

bool crosses(const Arc& a, const Arc& b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

Arc rotate_arc(const Arc& a, int k, int polygon) { return make_arc(a.i + k, a.j + k, polygon); }

std::string arc_label(const Arc& a, int polygon) {
    if (polygon <= 9) return std::to_string(a.i) + std::to_string(a.j);
    return std::to_string(a.i) + "-" + std::to_string(a.j);
}

Arc parse_arc(const std::string& s, int polygon) {
    int x = 0, y = 0;
    auto dash = s.find('-');
    try {
        if (dash != std::string::npos) {
            x = std::stoi(s.substr(0, dash));
            y = std::stoi(s.substr(dash + 1));
        } else if (s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[0])) &&
                   std::isdigit(static_cast<unsigned char>(s[1]))) {
            x = s[0] - '0';
            y = s[1] - '0';
        } else {
            throw Error(ErrorKind::InvalidInput, "cannot parse arc '" + s + "'");
        }
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "cannot parse arc '" + s + "'");
    }
    if (x < 1 || y < 1 || x > polygon || y > polygon || x == y)
        throw Error(ErrorKind::InvalidInput, "arc '" + s + "' is outside the " + std::to_string(polygon) + "-gon");
    if (is_side(x, y, polygon)) throw Error(ErrorKind::InvalidInput, "'" + s + "' is a side, not a diagonal");
    return x < y ? Arc{x, y} : Arc{y, x};
}

CatTable gen_cluster_A(int n, int bound) {
    if (n < 1 || n > bound)
        throw Error(ErrorKind::OutOfBounds, "rank " + std::to_string(n) + " outside 1.." + std::to_string(bound));
    const int polygon = n + 3;
    const Mesh mesh{n, polygon};
    const auto arcs = polygon_arcs(n);
    const int m = static_cast<int>(arcs.size());

    std::vector<Indec> indecs;
    for (const auto& a : arcs) indecs.push_back({arc_label(a, polygon), arc_label(a, polygon)});
    CatTable t(indecs);
    auto idx = [&](const Arc& a) {
        return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
    };

    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            auto lifts = mesh.lifts_in_rect(mesh.lift(arcs[x]), arcs[y]);
            if (lifts.size() > 1)
                throw Error(ErrorKind::InvalidInput, "orbit Hom space of dimension > 1 between " +
                                                         arc_label(arcs[x], polygon) + " and " +
                                                         arc_label(arcs[y], polygon));
            t.set_homdim(x, y, lifts.size());
        }

    // g f is the canonical map when the lift of z reached from the lift of y
    // stays in the hammock of x.
    for (int x = 0; x < m; ++x) {
        const Vertex vx = mesh.lift(arcs[x]);
        for (int y = 0; y < m; ++y) {
            if (!t.homdim(x, y)) continue;
            const Vertex vy = mesh.lifts_in_rect(vx, arcs[y]).front();
            for (int z = 0; z < m; ++z) {
                if (!t.homdim(y, z) || !t.homdim(x, z)) continue;
                const Vertex vz = mesh.lifts_in_rect(vy, arcs[z]).front();
                t.set_comp(x, y, z, 0, 0, 0, mesh.in_rect(vx, vz) ? 1 : 0);
            }
        }
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) perm[static_cast<std::size_t>(x)] = idx(rotate_arc(arcs[x], 1, polygon));
    t.set_susp(perm);

    // exchange triangles alpha -> mid -> beta -> alpha[1] for every crossing pair
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!crosses(arcs[a], arcs[b])) continue;
            std::vector<int> v{arcs[a].i, arcs[a].j, arcs[b].i, arcs[b].j};
            std::sort(v.begin(), v.end());
            const int pairings[2][2][2] = {{{v[0], v[1]}, {v[2], v[3]}}, {{v[1], v[2]}, {v[0], v[3]}}};
            std::vector<Object> accepted;
            for (const auto& pairing : pairings) {
                std::vector<int> summands;
                for (const auto& side : pairing)
                    if (!is_side(side[0], side[1], polygon)) summands.push_back(idx(make_arc(side[0], side[1], polygon)));
                bool ok;
                if (summands.empty())
                    ok = t.susp(a) == b;
                else
                    ok = std::all_of(summands.begin(), summands.end(),
                                     [&](int s) { return t.homdim(a, s) && t.homdim(s, b); });
                Object mid = Object::from_copies(summands);
                if (ok && std::find(accepted.begin(), accepted.end(), mid) == accepted.end()) accepted.push_back(mid);
            }
            if (accepted.size() != 1)
                throw Error(ErrorKind::InvalidInput, "exchange triangle direction not unique for " +
                                                         arc_label(arcs[a], polygon) + " -> " +
                                                         arc_label(arcs[b], polygon));
            TriangleRecord tr;
            tr.a = a;
            tr.b = b;
            tr.mid = accepted.front();
            tr.f.assign(tr.mid.size(), Rational(1));
            tr.g.assign(tr.mid.size(), Rational(1));
            MorCoords f = mor_from_flat(t, Object::of(a), tr.mid, tr.f);
            MorCoords g = mor_from_flat(t, tr.mid, Object::of(b), tr.g);
            if (!compose(t, f, g).is_zero()) tr.f.back() = -1;
            tr.delta = {Rational(1)};
            t.add_triangle(std::move(tr));
        }
    return t;
}

int cluster_rank(const CatTable& t) {
    // (n+3) n / 2 arcs
    const int m = static_cast<int>(t.size());
    for (int n = 1; n * (n + 3) / 2 <= m; ++n)
        if (n * (n + 3) / 2 == m) return n;
    throw Error(ErrorKind::InvalidInput, "table size does not match a polygon");
}

Arc arc_of(const CatTable& t, int index) { return parse_arc(t.indec(index).id, cluster_rank(t) + 3); }

int index_of_arc(const CatTable& t, const Arc& a) { return t.index_of(arc_label(a, cluster_rank(t) + 3)); }

namespace {

void triangulate(int lo, int hi, std::vector<std::vector<Arc>>& out) {
    // all triangulations of the polygon on consecutive vertices lo..hi
    out.clear();
    if (hi - lo < 2) {
        out.push_back({});
        return;
    }
    for (int k = lo + 1; k < hi; ++k) {
        std::vector<std::vector<Arc>> left, right;
        triangulate(lo, k, left);
        triangulate(k, hi, right);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Arc> tri = l;
                tri.insert(tri.end(), r.begin(), r.end());
                if (k - lo >= 2) tri.push_back({lo, k});
                if (hi - k >= 2) tri.push_back({k, hi});
                out.push_back(std::move(tri));
            }
    }
}

} // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 1 || n > 6) throw Error(ErrorKind::OutOfBounds, "triangulation enumeration supports 1 <= n <= 6");
    std::vector<std::vector<Arc>> all;
    triangulate(1, n + 3, all);
    for (auto& tri : all) std::sort(tri.begin(), tri.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<int> triangulation_indices(const CatTable& t, const Triangulation& tri) {
    std::vector<int> out;
    for (const auto& a : tri) out.push_back(index_of_arc(t, a));
    std::sort(out.begin(), out.end());
    return out;
}

PentagonFixture pentagon_fixture() {
    PentagonFixture fx{gen_cluster_A(2), {}, {}};
    const std::pair<const char*, const char*> names[] = {
        {"14", "2"}, {"13", "1/2"}, {"35", "1"}, {"25", "2[1]"}, {"24", "(1/2)[1]"}};
    for (auto [arc, name] : names) {
        fx.name_of_arc[arc] = name;
        fx.arc_of_name[name] = arc;
    }
    return fx;
}

std::vector<int> parse_subcat(const CatTable& t, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        int i = t.find(item);
        if (i < 0) {
            int n = -1;
            try {
                n = cluster_rank(t);
            } catch (const Error&) {
            }
            if (n > 0) i = index_of_arc(t, parse_arc(item, n + 3));
        }
        if (i < 0) throw Error(ErrorKind::InvalidInput, "unknown object '" + item + "'");
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace exkat
