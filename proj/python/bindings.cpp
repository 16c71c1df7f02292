#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <variant>

#include "gts/errors.hpp"
#include "gts/interp.hpp"
#include "gts/ratapprox.hpp"

namespace py = pybind11;
using namespace gts;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; wrap the handle
struct PyExpr {
    ExprPtr ptr;
};

Scalar scalar_from_py(const py::object& v, Domain dom) {
    if (py::isinstance<py::str>(v)) {
        auto s = Scalar::parse(dom, v.cast<std::string>());
        if (!s) throw Error("cannot parse number '" + v.cast<std::string>() + "'");
        return *s;
    }
    if (py::isinstance<py::int_>(v)) return Scalar::from_int(dom, v.cast<long>());
    if (dom == Domain::ExactRational)
        throw Error("exact values must be given as int or 'p/q' string");
    return Scalar(v.cast<double>());
}

py::object scalar_to_py(const Scalar& s) {
    if (s.is_exact()) return py::str(s.to_string());
    return py::float_(s.float64());
}

py::list poly_to_py(const Polynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(scalar_to_py(c));
    return out;
}

NodeSet nodeset_from_py(const py::object& nodes, bool exact,
                        const std::optional<std::pair<py::object, py::object>>& interval) {
    Domain dom = exact ? Domain::ExactRational : Domain::Float64;
    std::vector<Node> out;
    for (const auto& item : nodes) {
        auto pair = item.cast<py::sequence>();
        out.push_back({scalar_from_py(pair[0].cast<py::object>(), dom), pair[1].cast<int>()});
    }
    std::optional<std::pair<Scalar, Scalar>> iv;
    if (interval)
        iv = std::make_pair(scalar_from_py(interval->first, dom),
                            scalar_from_py(interval->second, dom));
    return NodeSet(std::move(out), std::move(iv));
}

HermiteData data_from_expr(const PyExpr& f, const NodeSet& ns) {
    return hermite_data_from_expr(*f.ptr, ns);
}

OsculateMethod method_from_str(const std::string& m) {
    if (m == "vandermonde") return OsculateMethod::Vandermonde;
    if (m == "spectral") return OsculateMethod::Spectral;
    throw Error("method must be 'vandermonde' or 'spectral'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "osculating-polynomial and multipoint-Pade approximation toolkit";

    // translators run newest-first: the base must go in before the deriveds
    py::register_exception<Error>(m, "GtsError");
    py::register_exception<SyntaxError>(m, "ExprSyntaxError");
    py::register_exception<DomainError>(m, "EvalDomainError");
    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<DegenerateTableError>(m, "DegenerateTableError");
    py::register_exception<PoleAtNodeError>(m, "PoleAtNodeError");
    py::register_exception<WitnessNotBracketedError>(m, "WitnessNotBracketedError");

    py::class_<PyExpr>(m, "Expr")
        .def("__str__", [](const PyExpr& e) { return serialize(*e.ptr); })
        .def("__repr__", [](const PyExpr& e) { return "Expr('" + serialize(*e.ptr) + "')"; })
        .def("__call__", [](const PyExpr& e, double x) {
            return derivative_at(*e.ptr, Scalar(x), 0).float64();
        });

    m.def("parse", [](const std::string& text) { return PyExpr{parse_expr(text)}; },
          "Parse an expression in x", py::arg("text"));

    py::class_<NodeSet>(m, "NodeSet")
        .def(py::init(&nodeset_from_py), py::arg("nodes"), py::arg("exact") = false,
             py::arg("interval") = std::nullopt)
        .def_static(
            "from_text",
            [](const std::string& text, bool exact) {
                return NodeSet::parse(text, exact ? Domain::ExactRational : Domain::Float64);
            },
            py::arg("text"), py::arg("exact") = false)
        .def_property_readonly("r", &NodeSet::r)
        .def_property_readonly("n", &NodeSet::n)
        .def("to_text", &NodeSet::to_text)
        .def("__repr__", [](const NodeSet& ns) { return "NodeSet('" + ns.to_text() + "')"; });

    py::class_<Osculant>(m, "Osculant")
        .def_property_readonly("g", [](const Osculant& o) { return poly_to_py(o.g); })
        .def_property_readonly("h", [](const Osculant& o) { return poly_to_py(o.h); })
        .def("eval", [](const Osculant& o, const py::object& x) {
            return scalar_to_py(eval(o.g, scalar_from_py(x, o.g.domain())));
        });

    py::class_<RationalApproximant>(m, "RationalApproximant")
        .def_property_readonly("u", [](const RationalApproximant& r) { return poly_to_py(r.u); })
        .def_property_readonly("v", [](const RationalApproximant& r) { return poly_to_py(r.v); })
        .def("eval", [](const RationalApproximant& r, const py::object& x) {
            return scalar_to_py(rational_eval(r, scalar_from_py(x, r.u.domain())));
        });

    m.def(
        "build_modulus",
        [](const NodeSet& ns) { return poly_to_py(build_modulus(ns)); },
        "Coefficients of h(x) = prod (x-x_i)^{m_i}, ascending", py::arg("nodes"));
    m.def("sigma", &sigma, py::arg("u"), py::arg("v"));
    m.def("zero_count_table", &zero_count_table, py::arg("nodes"));
    m.def("verify_rolle_numeric", &verify_rolle_numeric, py::arg("nodes"), py::arg("k"));

    m.def(
        "jet",
        [](const PyExpr& f, const py::object& center, int order, bool exact) {
            Jet j = jet_eval(*f.ptr, scalar_from_py(center, exact ? Domain::ExactRational
                                                              : Domain::Float64),
                             order);
            py::list out;
            for (const auto& c : j.coeffs()) out.append(scalar_to_py(c));
            return out;
        },
        "Truncated Taylor coefficients f^(k)(center)/k!", py::arg("f"), py::arg("center"),
        py::arg("order"), py::arg("exact") = false);
    m.def(
        "derivative_at",
        [](const PyExpr& f, const py::object& x, int k, bool exact) {
            return scalar_to_py(derivative_at(
                *f.ptr, scalar_from_py(x, exact ? Domain::ExactRational : Domain::Float64), k));
        },
        py::arg("f"), py::arg("x"), py::arg("k"), py::arg("exact") = false);
    m.def(
        "derivative_range",
        [](const PyExpr& f, int k, double a, double b, int grid) {
            return derivative_range(*f.ptr, k, a, b, grid);
        },
        py::arg("f"), py::arg("k"), py::arg("a"), py::arg("b"), py::arg("grid") = 1024);

    m.def(
        "osculate",
        [](const PyExpr& f, const NodeSet& ns, const std::string& method) {
            return osculate(data_from_expr(f, ns), method_from_str(method));
        },
        "Osculating polynomial of f on the node set", py::arg("f"), py::arg("nodes"),
        py::arg("method") = "vandermonde");
    m.def(
        "osculate_values",
        [](const NodeSet& ns, const py::object& values, const std::string& method) {
            std::vector<std::vector<Scalar>> vals;
            for (const auto& row : values) {
                std::vector<Scalar> vi;
                for (const auto& v : row.cast<py::object>())
                    vi.push_back(scalar_from_py(v.cast<py::object>(), ns.domain()));
                vals.push_back(std::move(vi));
            }
            return osculate(HermiteData(ns, std::move(vals)), method_from_str(method));
        },
        "Osculating polynomial from raw derivative targets (one list per node)",
        py::arg("nodes"), py::arg("values"), py::arg("method") = "vandermonde");
    m.def(
        "spectral_basis",
        [](const NodeSet& ns) {
            py::list out;
            for (const auto& s : spectral_basis(ns).s) out.append(poly_to_py(s));
            return out;
        },
        py::arg("nodes"));

    m.def(
        "taylor_value_with_bound",
        [](const PyExpr& f, const NodeSet& ns, double x, double a, double b) {
            auto r = taylor_value_with_bound(*f.ptr, ns, x, a, b);
            return std::make_pair(r.value, r.abs_err_bound);
        },
        py::arg("f"), py::arg("nodes"), py::arg("x"), py::arg("a"), py::arg("b"));
    m.def(
        "c_witness",
        [](const PyExpr& f, const NodeSet& ns, double x, double a, double b) {
            return c_witness(*f.ptr, ns, x, a, b);
        },
        py::arg("f"), py::arg("nodes"), py::arg("x"), py::arg("a"), py::arg("b"));
    m.def(
        "singular_limit",
        [](const PyExpr& f, const NodeSet& ns, int node_index) {
            HermiteData data = data_from_expr(f, ns);
            Osculant osc = osculate_vandermonde(data);
            return scalar_to_py(singular_limit(*f.ptr, data, osc, node_index));
        },
        py::arg("f"), py::arg("nodes"), py::arg("node_index"));

    m.def(
        "rational_fit",
        [](const PyExpr& f, const NodeSet& ns, int deg_num, int deg_den) {
            return rational_fit(data_from_expr(f, ns), deg_num, deg_den);
        },
        py::arg("f"), py::arg("nodes"), py::arg("deg_num"), py::arg("deg_den"));
    m.def(
        "rational_remainder_bound",
        [](const PyExpr& f, const RationalApproximant& R, double x, double a, double b) {
            return rational_remainder_bound(*f.ptr, R, x, a, b);
        },
        py::arg("f"), py::arg("approximant"), py::arg("x"), py::arg("a"), py::arg("b"));
    m.def(
        "verify_congruence",
        [](const RationalApproximant& R, const PyExpr& f, const NodeSet& ns) {
            return verify_congruence(R, data_from_expr(f, ns));
        },
        py::arg("approximant"), py::arg("f"), py::arg("nodes"));
}
