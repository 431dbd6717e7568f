#include "exkat/cattable_json.hpp"
#include "exkat/error.hpp"
#include "exkat/k0lab.hpp"
#include "exkat/suites.hpp"
#include "exkat/typea.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace exkat;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;

struct Options {
    std::string gen, table, subcat, structure = "full", predicate, format = "text", out, object, side = "right";
    std::vector<std::string> suites;
    bool all_triangulations = false;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    CatTable table;
    std::string label;
};

Loaded load(const Options& o) {
    if (o.gen.empty() == o.table.empty()) throw UsageError("give exactly one of --gen and --table");
    if (!o.table.empty()) return {load_table_file(o.table), o.table};
    if (o.gen == "pentagon") return {pentagon_fixture().table, "pentagon"};
    const std::string prefix = "cluster-a:";
    if (o.gen.rfind(prefix, 0) != 0) throw UsageError("unknown generator '" + o.gen + "'");
    int n = 0;
    try {
        n = std::stoi(o.gen.substr(prefix.size()));
    } catch (const std::logic_error&) {
        throw UsageError("bad rank in '" + o.gen + "'");
    }
    return {gen_cluster_A(n), o.gen};
}

Variant parse_variant(const std::string& s) {
    for (Variant v : {Variant::Full, Variant::Zero, Variant::XRight, Variant::XLeft, Variant::XBoth, Variant::NRight,
                      Variant::NLeft, Variant::NBoth})
        if (s == to_string(v)) return v;
    throw UsageError("unknown structure '" + s + "'");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + o.out);
    f << text;
}

std::uint64_t effective_seed(const Options& o) {
    if (const char* env = std::getenv("EXKAT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw UsageError("EXKAT_SEED is not an unsigned integer");
        }
    }
    return o.seed;
}

ordered_json group_json(const GroupPresentation& g) {
    ordered_json tors = ordered_json::array();
    for (const auto& d : g.torsion()) tors.push_back(d.get_str());
    return {{"generators", g.n_gens()}, {"free_rank", g.free_rank()}, {"torsion", tors}, {"describe", g.describe()}};
}

ordered_json vec_json(const IntVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::string vec_text(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

std::string json_out(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_gen(const Options& o) {
    const Loaded l = load(o);
    emit(o, dump_table(l.table, 2) + "\n");
    return 0;
}

int cmd_validate(const Options& o) {
    const Loaded l = load(o);
    const ValidationReport v = validate(l.table);
    if (o.format == "json") {
        ordered_json issues = ordered_json::array();
        for (const auto& i : v.issues) issues.push_back({{"kind", i.kind}, {"message", i.message}, {"warning", i.warning}});
        emit(o, json_out({{"table", l.label}, {"digest", hex64(table_digest(l.table))}, {"ok", v.ok()}, {"issues", issues}}));
    } else {
        std::ostringstream os;
        for (const auto& i : v.issues) os << (i.warning ? "warning " : "error ") << i.kind << ": " << i.message << "\n";
        os << (v.ok() ? "valid" : "invalid") << " " << l.label << "\n";
        emit(o, os.str());
    }
    return v.ok() ? 0 : 1;
}

int cmd_k0(const Options& o) {
    const Loaded l = load(o);
    const CatTable& t = l.table;
    const Subcat w = parse_subcat(t, o.subcat);
    const K0Instance k = o.structure == "split" ? k0_split(t, w) : k0(t, relative_ext(t, parse_variant(o.structure), w));
    if (o.format == "json") {
        ordered_json j = {{"table", l.label}, {"structure", o.structure}, {"subcat", subcat_label(t, w)}};
        j["group"] = group_json(k.group);
        j["relations"] = k.relation_triangles.size();
        emit(o, json_out(j));
    } else {
        emit(o, "K0(" + o.structure + ") = " + k.group.describe() + "\n");
    }
    return 0;
}

int cmd_index(const Options& o) {
    const Loaded l = load(o);
    const CatTable& t = l.table;
    const Subcat n = parse_subcat(t, o.subcat);
    const Subcat objs = parse_subcat(t, o.object);
    Object c;
    for (int i : objs) c = c + Object::of(i);
    if (o.side != "right" && o.side != "left") throw UsageError("--side is right or left");
    const IndexClass ic = o.side == "right" ? index_right(t, n, c) : index_left(t, n, c);
    if (o.format == "json") {
        emit(o, json_out({{"table", l.label},
                          {"side", o.side},
                          {"n", subcat_label(t, n)},
                          {"object", object_label(t, c)},
                          {"group", group_json(ic.k0.group)},
                          {"coords", vec_json(ic.coords)}}));
    } else {
        emit(o, "[" + object_label(t, c) + "] = " + vec_text(ic.coords) + " in " + ic.k0.group.describe() + "\n");
    }
    return 0;
}

int cmd_check(const Options& o) {
    const Loaded l = load(o);
    const CatTable& t = l.table;
    const Subcat n = parse_subcat(t, o.subcat);
    ordered_json j = {{"table", l.label}, {"predicate", o.predicate}, {"subcat", subcat_label(t, n)}};
    int code = 0;
    std::string line;
    if (o.predicate == "cone") {
        const ConeResult c = cone_condition(t, n);
        j["witness"] = to_string(c.kind);
        j["detail"] = c.detail;
        line = std::string("cone condition: ") + to_string(c.kind) + " " + c.detail;
    } else {
        const SubBifunctor sub = relative_ext(t, parse_variant(o.structure), n);
        PredicateResult r;
        if (o.predicate == "extension-closed")
            r = is_extension_closed(t, sub, n);
        else if (o.predicate == "thick")
            r = is_thick(t, sub, n);
        else if (o.predicate == "serre")
            r = is_serre(t, sub, n);
        else
            throw UsageError("unknown predicate '" + o.predicate + "'");
        j["structure"] = o.structure;
        j["verdict"] = to_string(r.verdict);
        if (r.triangle >= 0) j["triangle"] = r.triangle;
        if (!r.witness.empty()) j["witness"] = r.witness;
        line = o.predicate + ": " + to_string(r.verdict) + (r.witness.empty() ? "" : " (" + r.witness + ")");
        code = r.verdict == Verdict::Fail ? 1 : 0;
    }
    emit(o, o.format == "json" ? json_out(j) : line + "\n");
    return code;
}

int cmd_verify(const Options& o, std::vector<std::string> suites, const std::string& command) {
    const Loaded l = load(o);
    const CatTable& t = l.table;
    for (const auto& s : suites)
        if (!is_suite(s)) throw UsageError("unknown suite '" + s + "'");
    std::vector<Subject> subjects;
    if (o.all_triangulations) {
        for (const auto& tri : enumerate_triangulations(cluster_rank(t)))
            subjects.push_back({l.label, &t, triangulation_indices(t, tri)});
    } else {
        if (o.subcat.empty()) throw UsageError("give --subcat or --all-triangulations");
        subjects.push_back({l.label, &t, parse_subcat(t, o.subcat)});
    }
    Report rep;
    rep.command = command;
    rep.seed = effective_seed(o);
    rep.inputs.push_back({l.label, hex64(table_digest(t))});
    for (const auto& s : suites) {
        auto recs = run_suite(s, subjects, o.jobs, rep.seed);
        rep.checks.insert(rep.checks.end(), recs.begin(), recs.end());
    }
    emit(o, o.format == "json" ? json_out(rep.to_json()) : rep.to_text());
    return rep.exit_code();
}

std::vector<std::string> split_suites(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grothendieck-group computations on finite extriangulated tables"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);
    Options o;

    auto source = [&](CLI::App* sub) {
        sub->add_option("--gen", o.gen, "cluster-a:<n> or pentagon");
        sub->add_option("--table", o.table, "cattable-v1 JSON file");
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "write output to this file");
    };
    auto* gen = app.add_subcommand("gen", "emit a generated table as JSON");
    source(gen);
    auto* val = app.add_subcommand("validate", "check table axioms");
    source(val);
    auto* k0c = app.add_subcommand("k0", "Grothendieck group of a structure");
    source(k0c);
    k0c->add_option("--structure", o.structure, "split, full, zero, x-right, x-left, x-both, n-right, n-left, n-both");
    k0c->add_option("--subcat", o.subcat, "comma separated objects parametrizing the structure");
    auto* idx = app.add_subcommand("index", "right or left index of an object");
    source(idx);
    idx->add_option("--subcat", o.subcat, "the subcategory N")->required();
    idx->add_option("--object", o.object, "comma separated summands")->required();
    idx->add_option("--side", o.side, "right or left");
    auto* chk = app.add_subcommand("check", "subcategory predicates");
    source(chk);
    chk->add_option("--predicate", o.predicate, "extension-closed, thick, serre or cone")->required();
    chk->add_option("--structure", o.structure, "relative structure parametrized by the subcategory");
    chk->add_option("--subcat", o.subcat, "the subcategory N")->required();
    std::vector<std::string> raw_suites;
    auto suite_opts = [&](CLI::App* sub) {
        source(sub);
        sub->add_option("--subcat", o.subcat, "comma separated objects of X");
        sub->add_flag("--all-triangulations", o.all_triangulations, "every triangulation of the polygon");
        sub->add_option("--jobs", o.jobs, "worker threads, 0 for all cores");
        sub->add_option("--seed", o.seed, "seed for randomized properties");
    };
    auto* ver = app.add_subcommand("verify", "run verification suites");
    suite_opts(ver);
    ver->add_option("--suite", raw_suites, "suite name, repeatable or comma separated")->required();
    auto* rep = app.add_subcommand("report", "run every suite and emit a JSON report");
    suite_opts(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    try {
        if (gen->parsed()) return cmd_gen(o);
        if (val->parsed()) return cmd_validate(o);
        if (k0c->parsed()) return cmd_k0(o);
        if (idx->parsed()) return cmd_index(o);
        if (chk->parsed()) return cmd_check(o);
        if (ver->parsed()) return cmd_verify(o, split_suites(raw_suites), command);
        if (rep->parsed()) {
            if (!rep->count("--format")) o.format = "json";
            return cmd_verify(o, suite_names(), command);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Unsupported:
        case ErrorKind::NotRealizable:
        case ErrorKind::OutOfBounds: return 2;
        case ErrorKind::Refutation:
        case ErrorKind::InconsistentConstraints:
        case ErrorKind::NotBijective: return 1;
        default: return kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
