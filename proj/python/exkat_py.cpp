#include "exkat/cattable_json.hpp"
#include "exkat/error.hpp"
#include "exkat/k0lab.hpp"
#include "exkat/suites.hpp"
#include "exkat/typea.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace exkat;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::list to_py(const IntVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row(i)));
    return out;
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

IntMatrix matrix_from_py(const py::list& rows) {
    std::vector<IntVector> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        IntVector v;
        for (const auto& x : r.cast<py::list>()) v.push_back(from_py(x));
        cols = v.size();
        rs.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rs, cols);
}

Subcat subcat(const CatTable& t, const std::vector<std::string>& names) {
    std::vector<int> v;
    for (const auto& n : names) {
        const auto parsed = parse_subcat(t, n);
        v.insert(v.end(), parsed.begin(), parsed.end());
    }
    return make_subcat(v);
}

Object object(const CatTable& t, const std::vector<std::string>& names) {
    Object o;
    for (const auto& n : names)
        for (int i : parse_subcat(t, n)) o = o + Object::of(i);
    return o;
}

py::dict group(const GroupPresentation& g) {
    py::dict d;
    py::list tors;
    for (const auto& x : g.torsion()) tors.append(to_py(x));
    d["generators"] = g.n_gens();
    d["free_rank"] = g.free_rank();
    d["torsion"] = tors;
    d["describe"] = g.describe();
    return d;
}

Variant variant(const std::string& s) {
    for (Variant v : {Variant::Full, Variant::Zero, Variant::XRight, Variant::XLeft, Variant::XBoth, Variant::NRight,
                      Variant::NLeft, Variant::NBoth})
        if (s == to_string(v)) return v;
    throw py::value_error("unknown structure '" + s + "'");
}

} // namespace

PYBIND11_MODULE(_exkat, m) {
    m.attr("__version__") = tool_version();
    py::register_exception<Error>(m, "ExkatError", PyExc_ValueError);

    py::class_<CatTable>(m, "Table")
        .def_property_readonly("size", &CatTable::size)
        .def("ids", [](const CatTable& t) {
            std::vector<std::string> out;
            for (const auto& i : t.indecs()) out.push_back(i.id);
            return out;
        })
        .def("homdim", [](const CatTable& t, const std::string& a, const std::string& b) {
            return t.homdim(t.index_of(a), t.index_of(b));
        })
        .def("susp", [](const CatTable& t, const std::string& a, int k) { return t.indec(t.susp(t.index_of(a), k)).id; },
             py::arg("a"), py::arg("k") = 1)
        .def("triangle_count", [](const CatTable& t) { return t.triangles().size(); })
        .def("to_json", [](const CatTable& t) { return dump_table(t, 1); })
        .def("digest", [](const CatTable& t) { return hex64(table_digest(t)); })
        .def("opposite", [](const CatTable& t) { return opposite(t); })
        .def("validate", [](const CatTable& t) {
            py::list out;
            for (const auto& i : validate(t).issues) out.append(py::make_tuple(i.kind, i.message, i.warning));
            return out;
        });

    m.def("cluster_a", [](int n) { return gen_cluster_A(n); }, py::arg("n"));
    m.def("pentagon", [] { return pentagon_fixture().table; });
    m.def("load_table", &load_table_file, py::arg("path"));
    m.def("triangulations", [](int n) {
        std::vector<std::vector<std::string>> out;
        for (const auto& tri : enumerate_triangulations(n)) {
            std::vector<std::string> arcs;
            for (const auto& a : tri) arcs.push_back(arc_label(a, n + 3));
            out.push_back(std::move(arcs));
        }
        return out;
    });
    m.def("snf", [](const py::list& rows) {
        const SnfResult s = snf(matrix_from_py(rows));
        py::dict d;
        d["d"] = to_py(IntVector(s.d.begin(), s.d.end()));
        d["u"] = to_py(s.u);
        d["v"] = to_py(s.v);
        d["rank"] = s.rank;
        return d;
    });
    m.def("k0", [](const CatTable& t, const std::string& structure, const std::vector<std::string>& w) {
        const Subcat s = subcat(t, w);
        return group(structure == "split" ? k0_split(t, s).group : k0(t, relative_ext(t, variant(structure), s)).group);
    }, py::arg("table"), py::arg("structure") = "full", py::arg("subcat") = std::vector<std::string>{});
    m.def("index", [](const CatTable& t, const std::vector<std::string>& n, const std::vector<std::string>& c,
                      const std::string& side) {
        const IndexClass ic = side == "left" ? index_left(t, subcat(t, n), object(t, c))
                                             : index_right(t, subcat(t, n), object(t, c));
        py::dict d;
        d["group"] = group(ic.k0.group);
        d["coords"] = to_py(ic.coords);
        return d;
    }, py::arg("table"), py::arg("n"), py::arg("object"), py::arg("side") = "right");
    m.def("index_vectors", [](const CatTable& t, const std::vector<std::string>& x) {
        const IndexIsoReport r = index_iso_check(t, subcat(t, x));
        py::dict d;
        for (std::size_t c = 0; c < r.index_vectors.size(); ++c)
            d[py::str(t.indec(static_cast<int>(c)).id)] = to_py(r.index_vectors[c]);
        return d;
    });
    m.def("comparison_check", [](const CatTable& t, const std::vector<std::string>& x) {
        return comparison_check(t, subcat(t, x));
    });
    m.def("exactness_check", [](const CatTable& t, const std::vector<std::string>& x) {
        return exactness_check(RelativeK0(t, subcat(t, x))).ok();
    });
    m.def("fedele_check", [](const CatTable& t, const std::vector<std::string>& x) {
        return fedele_fx_check(t, subcat(t, x));
    });
    m.def("higher_k0_check", [](const CatTable& t, const std::vector<std::string>& x, int n) {
        const HigherK0Report r = thm_higher_k0_check(t, subcat(t, x), n);
        py::dict d;
        d["angles"] = r.angles;
        d["sound_violations"] = r.sound_violations;
        d["generated_equals_kernel"] = r.generated_equals_kernel;
        d["gap"] = r.gap;
        return d;
    }, py::arg("table"), py::arg("x"), py::arg("n") = 2);
    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const CatTable& t, const std::string& suite, const std::vector<std::vector<std::string>>& xs,
                          std::uint64_t seed) {
        std::vector<Subject> subjects;
        for (const auto& x : xs) subjects.push_back({"table", &t, subcat(t, x)});
        std::vector<CheckRecord> recs;
        {
            py::gil_scoped_release release;
            recs = run_suite(suite, subjects, 1, seed);
        }
        py::list out;
        for (const auto& r : recs) {
            py::dict d;
            d["id"] = r.id;
            d["status"] = to_string(r.status);
            d["witness"] = r.witness.dump();
            out.append(d);
        }
        return out;
    }, py::arg("table"), py::arg("suite"), py::arg("subcats"), py::arg("seed") = 0);
}
