#include "exkat/suites.hpp"

#include "exkat/cattable_json.hpp"
#include "exkat/error.hpp"
#include "exkat/k0lab.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace exkat {

using nlohmann::ordered_json;

namespace {

ordered_json vec_json(const IntVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

const std::map<std::string, std::string>& anchors() {
    static const std::map<std::string, std::string> m = {
        {"comparison", "X-right structure equals N-right structure on perp0(X)"},
        {"index-iso", "split K0 of X is isomorphic to K0 of the X-right structure"},
        {"resolution", "alternating sums of X-resolutions equal index vectors"},
        {"theta", "error-term homomorphisms are well defined"},
        {"additivity", "index additivity up to the error term"},
        {"exactness", "right exact sequences of Grothendieck groups"},
        {"diagram", "surjections in the index diagram"},
        {"fedele", "split K0 of X modulo the twisted image is K0"},
        {"higher", "Grothendieck group of the higher angulated X"},
        {"engine", "exact arithmetic and table invariants"},
    };
    return m;
}

CheckRecord check_comparison(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    const bool ok = comparison_check(t, x);
    r.status = ok ? Status::Pass : Status::Fail;
    r.witness["perp0"] = subcat_label(t, perp0(t, x));
    return r;
}

CheckRecord check_index_iso(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    try {
        const IndexIsoReport rep = index_iso_check(t, x);
        r.witness["target"] = rep.target;
        ordered_json iv = ordered_json::object();
        for (std::size_t c = 0; c < rep.index_vectors.size(); ++c)
            iv[t.indec(static_cast<int>(c)).id] = vec_json(rep.index_vectors[c]);
        r.witness["index_vectors"] = iv;
        r.status = Status::Pass;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotBijective) throw;
        r.status = Status::Fail;
        r.witness["error"] = e.what();
    }
    return r;
}

CheckRecord check_resolution(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    std::size_t verified = 0, longest = 0;
    ordered_json missing = ordered_json::array(), failed = ordered_json::array();
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        auto res = find_resolution(t, x, Object::of(c), 4);
        if (!res) {
            missing.push_back(t.indec(c).id);
            continue;
        }
        const ResolutionCheck chk = resolution_verify(t, x, *res);
        if (!chk.ok) {
            failed.push_back({{"object", t.indec(c).id}, {"reason", chk.reason}});
            continue;
        }
        ++verified;
        longest = std::max(longest, res->conflations.size());
    }
    r.witness["verified"] = verified;
    r.witness["longest"] = longest;
    if (!missing.empty()) r.witness["missing"] = missing;
    if (!failed.empty()) r.witness["failed"] = failed;
    r.status = !failed.empty() ? Status::Fail : !missing.empty() ? Status::NotRefuted : Status::Pass;
    return r;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

CheckRecord check_theta(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    RelativeK0 ctx(t, x);
    try {
        r.witness["right"] = matrix_json(ctx.theta_right().matrix());
        r.witness["left"] = matrix_json(ctx.theta_left().matrix());
        r.witness["k0_right"] = ctx.k0_right().group.describe();
        r.witness["k0_left"] = ctx.k0_left().group.describe();
        r.status = Status::Pass;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InconsistentConstraints) throw;
        r.status = Status::Fail;
        r.witness["error"] = e.what();
    }
    return r;
}

CheckRecord check_additivity(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    RelativeK0 ctx(t, x);
    const int period = rotation_period(t);
    std::size_t checked = 0, nonzero_error = 0;
    for (std::size_t i = 0; i < t.triangles().size(); ++i) {
        Triangle tri = from_record(t, t.triangles()[i]);
        for (int rot = 0; rot < period; ++rot) {
            for (Side side : {Side::Right, Side::Left}) {
                const AdditivityResult a = additivity_check(ctx, tri, side);
                ++checked;
                if (std::any_of(a.image.begin(), a.image.end(), [](const Integer& v) { return v != 0; }))
                    ++nonzero_error;
                if (!a.ok) {
                    r.status = Status::Fail;
                    r.witness["triangle"] = i;
                    r.witness["rotation"] = rot;
                    r.witness["side"] = side == Side::Right ? "right" : "left";
                    r.witness["lhs"] = vec_json(a.lhs);
                    r.witness["rhs"] = vec_json(a.rhs);
                    return r;
                }
            }
            tri = rotate_triangle(t, tri);
        }
    }
    r.status = Status::Pass;
    r.witness["checked"] = checked;
    r.witness["nonzero_error_terms"] = nonzero_error;
    return r;
}

CheckRecord check_exactness(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    const ExactnessReport e = exactness_check(RelativeK0(t, x));
    r.status = e.ok() ? Status::Pass : Status::Fail;
    r.witness = {{"right_exact", e.right_exact},
                 {"left_exact", e.left_exact},
                 {"right_surjective", e.right_surjective},
                 {"left_surjective", e.left_surjective}};
    return r;
}

CheckRecord check_diagram(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    const DiagramReport d = diagram_report(RelativeK0(t, x));
    r.status = d.ok() ? Status::Pass : Status::Fail;
    r.witness = {{"k0_two_sided", d.k0_two_sided}, {"onto_right", d.onto_right}, {"onto_left", d.onto_left},
                 {"onto_ambient", d.onto_ambient}, {"p_defined", d.p_defined},   {"p_onto", d.p_onto}};
    return r;
}

CheckRecord check_fedele(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    if (!is_cluster_tilting(t, x, 2)) {
        r.status = Status::Unsupported;
        r.witness["reason"] = "X is not 2-cluster-tilting";
        return r;
    }
    const FedeleReport f = fedele_fx_check(RelativeK0(t, x));
    r.status = f.ok ? Status::Pass : Status::Fail;
    r.witness = {{"rho_onto", f.rho_onto}, {"kernel_matches", f.kernel_matches}, {"twisted", matrix_json(f.twisted)}};
    return r;
}

CheckRecord check_higher(const CatTable& t, const Subcat& x, std::uint64_t) {
    CheckRecord r;
    const HigherK0Report h = thm_higher_k0_check(t, x, 2);
    r.witness = {{"angles", h.angles},
                 {"sound_violations", h.sound_violations},
                 {"unrealizable", h.unrealizable},
                 {"kernel", h.kernel},
                 {"generated_equals_kernel", h.generated_equals_kernel},
                 {"gap", h.gap}};
    r.status = h.sound_violations ? Status::Fail : h.generated_equals_kernel ? Status::Pass : Status::NotRefuted;
    return r;
}

CheckRecord check_engine(const CatTable& t, const Subcat&, std::uint64_t seed) {
    CheckRecord r;
    const ValidationReport v = validate(t);
    std::string snf_witness;
    const std::size_t snf_fail = snf_property_failures(seed ^ table_digest(t), 200, &snf_witness);
    r.status = v.ok() && !snf_fail ? Status::Pass : Status::Fail;
    r.witness["table_issues"] = v.issues.size();
    if (!v.issues.empty()) r.witness["first_issue"] = v.issues.front().kind + ": " + v.issues.front().message;
    r.witness["snf_samples"] = 200;
    r.witness["snf_failures"] = snf_fail;
    if (snf_fail) r.witness["snf_witness"] = snf_witness;
    return r;
}

using CheckFn = CheckRecord (*)(const CatTable&, const Subcat&, std::uint64_t);

CheckFn check_of(const std::string& suite) {
    static const std::map<std::string, CheckFn> m = {
        {"comparison", check_comparison}, {"index-iso", check_index_iso}, {"resolution", check_resolution},
        {"theta", check_theta},           {"additivity", check_additivity}, {"exactness", check_exactness},
        {"diagram", check_diagram},       {"fedele", check_fedele},       {"higher", check_higher},
        {"engine", check_engine},
    };
    return m.at(suite);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"comparison", "index-iso", "resolution", "theta",  "additivity",
                                                   "exactness",  "diagram",   "fedele",     "higher", "engine"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<CheckRecord> run_suite(const std::string& suite, const std::vector<Subject>& subjects, unsigned jobs,
                                   std::uint64_t seed) {
    if (!is_suite(suite)) throw Error(ErrorKind::InvalidInput, "unknown suite '" + suite + "'");
    std::vector<Subject> items;
    if (suite == "engine") {
        for (const auto& s : subjects)
            if (std::none_of(items.begin(), items.end(), [&](const Subject& o) { return o.table == s.table; }))
                items.push_back({s.table_label, s.table, {}});
    } else {
        items = subjects;
    }
    std::vector<CheckRecord> out(items.size());
    const CheckFn fn = check_of(suite);
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        const Subject& s = items[i];
        CheckRecord rec;
        try {
            rec = fn(*s.table, s.x, seed);
        } catch (const Error& e) {
            switch (e.kind()) {
            case ErrorKind::Unsupported:
            case ErrorKind::NotRealizable:
            case ErrorKind::InvalidInput: rec.status = Status::Unsupported; break;
            default: rec.status = Status::Fail;
            }
            rec.witness = {{"error", e.what()}};
        }
        rec.id = suite + "/" + s.table_label;
        if (suite != "engine") rec.id += "/" + subcat_label(*s.table, s.x);
        rec.anchor = anchors().at(suite);
        out[i] = std::move(rec);
    });
    return out;
}

int rotation_period(const CatTable& t) {
    int order = 1;
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
        int len = 1;
        for (int b = t.susp(a); b != a; b = t.susp(b)) ++len;
        order = std::lcm(order, len);
    }
    return 3 * order;
}

std::size_t snf_property_failures(std::uint64_t seed, std::size_t samples, std::string* witness) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    std::size_t failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
        const SnfResult res = snf(a);
        IntMatrix diag(r, c);
        for (std::size_t i = 0; i < res.d.size(); ++i) diag(i, i) = res.d[i];
        bool ok = res.u * a * res.v == diag && (res.v * res.v_inv).is_identity();
        for (std::size_t i = 0; ok && i < res.d.size(); ++i) {
            if (res.d[i] < 0) ok = false;
            if (i + 1 < res.d.size() && res.d[i + 1] != 0 && res.d[i + 1] % res.d[i] != 0) ok = false;
            if (i + 1 < res.d.size() && res.d[i] == 0 && res.d[i + 1] != 0) ok = false;
        }
        if (!ok) {
            ++failures;
            if (witness && witness->empty()) *witness = a.to_string();
        }
    }
    return failures;
}

} // namespace exkat
