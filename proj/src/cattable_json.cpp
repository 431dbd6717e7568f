#include "exkat/cattable_json.hpp"

#include "exkat/error.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace exkat {

using nlohmann::json;
using nlohmann::ordered_json;

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (!v.is_string()) throw Error(ErrorKind::InvalidInput, "rational must be a \"p/q\" string, got " + v.dump());
    const std::string s = v.get<std::string>();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
        throw Error(ErrorKind::InvalidInput, "malformed rational \"" + s + "\"");
    q.canonicalize();
    return q;
}

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, const std::set<std::string>& required,
                  const std::string& where) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw Error(ErrorKind::InvalidInput, "unknown key '" + it.key() + "' in " + where);
    for (const auto& k : required)
        if (!j.contains(k)) throw Error(ErrorKind::InvalidInput, "missing key '" + k + "' in " + where);
}

ordered_json rationals(const QVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& q : v) a.push_back(rational_string(q));
    return a;
}

QVector parse_rationals(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, where + " must be an array");
    QVector v;
    for (const auto& x : j) v.push_back(parse_rational(x));
    return v;
}

std::vector<std::string> split_key(const std::string& key, std::size_t parts) {
    std::vector<std::string> out;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, '|')) out.push_back(item);
    if (out.size() != parts) throw Error(ErrorKind::InvalidInput, "malformed key '" + key + "'");
    return out;
}

ordered_json object_json(const CatTable& t, const Object& o) {
    ordered_json a = ordered_json::array();
    for (auto [i, m] : o.parts()) a.push_back(ordered_json::array({t.indec(i).id, m}));
    return a;
}

} // namespace

ordered_json table_to_json(const CatTable& t) {
    const int n = static_cast<int>(t.size());
    ordered_json j;
    j["field"] = "Q";
    ordered_json ind = ordered_json::array();
    for (const auto& x : t.indecs()) ind.push_back(ordered_json{{"id", x.id}, {"name", x.name}});
    j["indecs"] = ind;

    ordered_json perm = ordered_json::object(), action = ordered_json::object();
    for (int a = 0; a < n; ++a) perm[t.indec(a).id] = t.indec(t.susp(a)).id;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < t.homdim(a, b); ++k)
                action[t.indec(a).id + "|" + t.indec(b).id + "|" + std::to_string(k)] =
                    rational_string(t.basis_action(a, b, k));
    j["susp"] = ordered_json{{"perm", perm}, {"basis_action", action}};

    ordered_json hd = ordered_json::object();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.homdim(a, b)) hd[t.indec(a).id + "|" + t.indec(b).id] = t.homdim(a, b);
    j["homdim"] = hd;

    ordered_json comp = ordered_json::array();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const QVector& v = t.comp(a, b, c);
                if (v.empty() || is_zero(v)) continue;
                comp.push_back(ordered_json{{"a", t.indec(a).id},
                                            {"b", t.indec(b).id},
                                            {"c", t.indec(c).id},
                                            {"constants", rationals(v)}});
            }
    j["comp"] = comp;

    ordered_json tris = ordered_json::array();
    for (const auto& tr : t.triangles())
        tris.push_back(ordered_json{{"a", t.indec(tr.a).id},
                                    {"mid", object_json(t, tr.mid)},
                                    {"b", t.indec(tr.b).id},
                                    {"f", rationals(tr.f)},
                                    {"g", rationals(tr.g)},
                                    {"delta", rationals(tr.delta)}});
    j["triangles"] = tris;
    return j;
}

CatTable table_from_json(const json& j) {
    const std::set<std::string> top{"field", "indecs", "susp", "homdim", "comp", "triangles"};
    require_keys(j, top, top, "table");
    if (j["field"] != "Q") throw Error(ErrorKind::InvalidInput, "field must be \"Q\"");

    std::vector<Indec> indecs;
    if (!j["indecs"].is_array()) throw Error(ErrorKind::InvalidInput, "indecs must be an array");
    for (const auto& x : j["indecs"]) {
        require_keys(x, {"id", "name"}, {"id", "name"}, "indec");
        if (!x["id"].is_string() || !x["name"].is_string())
            throw Error(ErrorKind::InvalidInput, "indec id and name must be strings");
        indecs.push_back({x["id"].get<std::string>(), x["name"].get<std::string>()});
    }
    CatTable t(indecs);
    const std::size_t n = t.size();
    auto ref = [&](const json& v) {
        if (!v.is_string()) throw Error(ErrorKind::InvalidInput, "indecomposable reference must be a string");
        return t.index_of(v.get<std::string>());
    };

    const json& hd = j["homdim"];
    if (!hd.is_object()) throw Error(ErrorKind::InvalidInput, "homdim must be an object");
    for (auto it = hd.begin(); it != hd.end(); ++it) {
        auto k = split_key(it.key(), 2);
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
            throw Error(ErrorKind::InvalidInput, "homdim entry '" + it.key() + "' must be a non-negative integer");
        t.set_homdim(t.index_of(k[0]), t.index_of(k[1]), it.value().get<std::size_t>());
    }

    const json& su = j["susp"];
    require_keys(su, {"perm", "basis_action"}, {"perm"}, "susp");
    if (!su["perm"].is_object()) throw Error(ErrorKind::InvalidInput, "susp.perm must be an object");
    std::vector<int> perm(n, -1);
    for (auto it = su["perm"].begin(); it != su["perm"].end(); ++it)
        perm[static_cast<std::size_t>(t.index_of(it.key()))] = ref(it.value());
    for (int p : perm)
        if (p < 0) throw Error(ErrorKind::InvalidInput, "susp.perm does not cover every indecomposable");
    t.set_susp(perm);
    if (su.contains("basis_action")) {
        if (!su["basis_action"].is_object()) throw Error(ErrorKind::InvalidInput, "basis_action must be an object");
        for (auto it = su["basis_action"].begin(); it != su["basis_action"].end(); ++it) {
            auto k = split_key(it.key(), 3);
            std::size_t idx = 0;
            try {
                idx = std::stoul(k[2]);
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidInput, "malformed basis index in '" + it.key() + "'");
            }
            t.set_basis_action(t.index_of(k[0]), t.index_of(k[1]), idx, parse_rational(it.value()));
        }
    }

    if (!j["comp"].is_array()) throw Error(ErrorKind::InvalidInput, "comp must be an array");
    for (const auto& c : j["comp"]) {
        require_keys(c, {"a", "b", "c", "constants"}, {"a", "b", "c", "constants"}, "comp entry");
        t.set_comp(ref(c["a"]), ref(c["b"]), ref(c["c"]), parse_rationals(c["constants"], "constants"));
    }

    if (!j["triangles"].is_array()) throw Error(ErrorKind::InvalidInput, "triangles must be an array");
    for (const auto& x : j["triangles"]) {
        const std::set<std::string> keys{"a", "mid", "b", "f", "g", "delta"};
        require_keys(x, keys, keys, "triangle");
        TriangleRecord tr;
        tr.a = ref(x["a"]);
        tr.b = ref(x["b"]);
        if (!x["mid"].is_array()) throw Error(ErrorKind::InvalidInput, "mid must be an array");
        std::vector<int> copies;
        for (const auto& p : x["mid"]) {
            if (!p.is_array() || p.size() != 2 || !p[1].is_number_integer() || p[1].get<int>() < 1)
                throw Error(ErrorKind::InvalidInput, "mid entries must be [id, multiplicity >= 1]");
            for (int k = 0; k < p[1].get<int>(); ++k) copies.push_back(ref(p[0]));
        }
        tr.mid = Object::from_copies(copies);
        tr.f = parse_rationals(x["f"], "f");
        tr.g = parse_rationals(x["g"], "g");
        tr.delta = parse_rationals(x["delta"], "delta");
        t.add_triangle(std::move(tr));
    }
    return t;
}

std::string dump_table(const CatTable& t, int indent) { return table_to_json(t).dump(indent); }

CatTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
    }
    return table_from_json(j);
}

void save_table_file(const CatTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
    out << dump_table(t) << '\n';
}

std::uint64_t table_digest(const CatTable& t) {
    const std::string s = table_to_json(t).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace exkat
