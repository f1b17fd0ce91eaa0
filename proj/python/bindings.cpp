#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ggk/curve.hpp"
#include "ggk/orderbound.hpp"
#include "ggk/oracle.hpp"
#include "ggk/report.hpp"
#include "ggk/semigroup.hpp"

namespace py = pybind11;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

ggk::TwoPointDivisor divisor(ggk::Int a1, ggk::Int a2) { return {a1, a2}; }

ggk::OnePointRule rule_from(const std::string& name) {
    if (name == "axes") return ggk::OnePointRule::TableAxes;
    if (name == "recursion") return ggk::OnePointRule::AxisRecursion;
    throw std::invalid_argument("one_point must be 'axes' or 'recursion'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Order bounds for two-point codes on generalized Giulietti-Korchmaros curves";

    py::register_exception<ggk::InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);

    py::class_<ggk::CurveParams>(m, "CurveParams")
        .def_readonly("q", &ggk::CurveParams::q)
        .def_readonly("e", &ggk::CurveParams::e)
        .def_readonly("r", &ggk::CurveParams::r)
        .def_readonly("genus", &ggk::CurveParams::genus)
        .def_readonly("n_places", &ggk::CurveParams::n_places)
        .def_readonly("n", &ggk::CurveParams::n)
        .def_readonly("gen_x", &ggk::CurveParams::gen_x)
        .def_readonly("gen_y", &ggk::CurveParams::gen_y)
        .def_readonly("gen_z", &ggk::CurveParams::gen_z)
        .def_readonly("w_deg", &ggk::CurveParams::w_deg)
        .def_readonly("m_dual", &ggk::CurveParams::m_dual)
        .def_readonly("m_dual_printed", &ggk::CurveParams::m_dual_printed)
        .def("goppa", &ggk::CurveParams::goppa, py::arg("deg"))
        .def("__repr__", [](const ggk::CurveParams& c) {
            std::ostringstream out;
            out << "CurveParams(q=" << c.q << ", e=" << c.e << ", genus=" << c.genus << ", n=" << c.n << ")";
            return out.str();
        });

    m.def("new_curve", &ggk::new_curve, py::arg("q"), py::arg("e"));

    m.def("decompose", [](ggk::Int i, const ggk::CurveParams& c) {
        const auto t = ggk::decompose(i, c);
        return py::make_tuple(t.k, t.l, t.m);
    }, py::arg("i"), py::arg("curve"), "(k, l, m) of the monomial with Q0 pole order i");
    m.def("tau", &ggk::tau, py::arg("i"), py::arg("curve"));
    m.def("tau_inv", &ggk::tau_inv, py::arg("j"), py::arg("curve"));
    m.def("gaps_q0", &ggk::gaps_q0, py::arg("curve"));
    m.def("gaps_qinf", &ggk::gaps_qinf, py::arg("curve"));

    m.def("dim_l", [](ggk::Int a1, ggk::Int a2, const ggk::CurveParams& c) { return ggk::dim_l(divisor(a1, a2), c); },
          py::arg("a1"), py::arg("a2"), py::arg("curve"));
    m.def("dim_code", [](ggk::Int a1, ggk::Int a2, const ggk::CurveParams& c) { return ggk::dim_code(divisor(a1, a2), c); },
          py::arg("a1"), py::arg("a2"), py::arg("curve"));
    m.def("nu_q0", &ggk::nu_q0, py::arg("a"), py::arg("b"), py::arg("curve"));
    m.def("nu_qinf", &ggk::nu_qinf, py::arg("a"), py::arg("b"), py::arg("curve"));

    py::class_<ggk::BoundTable>(m, "BoundTable")
        .def_property_readonly("delta", &ggk::BoundTable::delta)
        .def("contains", &ggk::BoundTable::contains, py::arg("a"), py::arg("b"))
        .def("at", &ggk::BoundTable::at, py::arg("a"), py::arg("b"))
        .def("dim_code_at", &ggk::BoundTable::dim_code_at, py::arg("a"), py::arg("b"));

    m.def("build_table", &ggk::build_table, py::arg("curve"), py::arg("delta") = py::none(),
          py::call_guard<py::gil_scoped_release>());
    m.def("bound", [](ggk::Int a1, ggk::Int a2, const ggk::BoundTable& t, const ggk::CurveParams& c) {
        return ggk::bound(divisor(a1, a2), t, c);
    }, py::arg("a1"), py::arg("a2"), py::arg("table"), py::arg("curve"));

    m.def("best_codes", [](const ggk::CurveParams& c, const ggk::BoundTable& t, const std::string& one_point) {
        py::list rows;
        for (const auto& r : ggk::best_rows(c, t, rule_from(one_point))) {
            py::dict row;
            row["n"] = r.n;
            row["k"] = r.k;
            row["a1"] = r.a1;
            row["a2"] = r.a2;
            row["d_2P"] = r.d_2p;
            row["d_1P"] = r.d_1p;
            rows.append(row);
        }
        return rows;
    }, py::arg("curve"), py::arg("table"), py::arg("one_point") = "axes",
       "Best-code rows in descending k, as dicts with keys n, k, a1, a2, d_2P, d_1P");

    m.def("verify", [](const ggk::CurveParams& c, ggk::Int samples, ggk::Int work_limit) {
        ggk::VerifyOptions opts;
        opts.samples = samples;
        opts.work_limit = work_limit;
        ggk::VerifyReport report;
        {
            py::gil_scoped_release release;
            report = ggk::run_verify(c, opts);
        }
        py::list checks;
        for (const auto& r : report.checks) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["total"] = r.total;
            d["informational"] = r.informational;
            checks.append(d);
        }
        return py::make_tuple(report.ok(), checks);
    }, py::arg("curve"), py::arg("samples") = 20, py::arg("work_limit") = ggk::kDefaultWorkLimit,
       "Run the exact oracle checks; returns (ok, list of check dicts)");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
