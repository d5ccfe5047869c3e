#include <pybind11/pybind11.h>

#include "rcyclo/chart.hpp"
#include "rcyclo/io.hpp"

namespace py = pybind11;
using namespace rcyclo;

namespace {

XAdicOptions window(int lo, int hi) {
    XAdicOptions o;
    o.lo = lo;
    o.hi = hi;
    return o;
}

SpectralSequence sequence(const std::string& which, std::uint32_t p) {
    if (which != "hfpss" && which != "tss") throw py::value_error("which must be hfpss or tss");
    Presentation e2 = x_adic_e2(p, which == "tss" ? Flavor::Tate : Flavor::HomotopyFixed);
    std::vector<DifferentialRule> rules;
    if (p == 2) rules = f2_rules(e2, derive_key_differential(e2).rule);
    return SpectralSequence(e2, rules);
}

}  // namespace

PYBIND11_MODULE(_rcyclo, m) {
    m.doc() = "JSON front end to the rcyclo core";
    py::register_exception<WindowError>(m, "WindowError", PyExc_ValueError);
    py::register_exception<UndeterminedDifferential>(m, "UndeterminedDifferential");

    m.def("tcr", [](std::uint32_t p, int lo, int hi) {
        return p == 2 ? dump(to_json(tcr_f2(window(lo, hi)))) : dump(to_json(tcr_odd(p, window(lo, hi))));
    }, py::arg("p") = 2, py::arg("lo") = -6, py::arg("hi") = 6);
    m.def("tcr_minus", [](int lo, int hi) { return dump(to_json(tcr_minus_f2(window(lo, hi)))); },
          py::arg("lo") = -6, py::arg("hi") = 6);
    m.def("tpr", [](int lo, int hi) { return dump(to_json(tpr_f2(window(lo, hi)))); }, py::arg("lo") = -6,
          py::arg("hi") = 6);
    m.def("gfp", [](int lo, int hi, int t_max) { return dump(to_json(gfp_tcr_f2({lo, hi, t_max}))); },
          py::arg("lo") = -4, py::arg("hi") = 4, py::arg("t_max") = 24);
    m.def("tcr_perfect", [](std::uint32_t p, unsigned n, unsigned prec) { return dump(to_json(tcr_perfect(p, n, prec))); },
          py::arg("p"), py::arg("n"), py::arg("prec") = 5);
    m.def("page", [](const std::string& which, int page, int s_lo, int s_hi, int t_lo, int t_hi, std::uint32_t p) {
        SpectralSequence ss = sequence(which, p);
        return dump(to_json(export_page(ss, page, {s_lo, s_hi, t_lo, t_hi, 0, 0})));
    }, py::arg("which"), py::arg("page"), py::arg("s_lo"), py::arg("s_hi"), py::arg("t_lo"), py::arg("t_hi"),
          py::arg("p") = 2);
    m.def("chart", [](const std::string& which, int page, int s_lo, int s_hi, int t_lo, int t_hi, const std::string& fmt) {
        SpectralSequence ss = sequence(which, 2);
        ChartSpec c = make_chart(ss, page, {s_lo, s_hi, t_lo, t_hi, 0, 0});
        if (fmt == "svg") return render_svg(c);
        if (fmt == "ascii") return render_ascii(c);
        throw py::value_error("format must be ascii or svg");
    }, py::arg("which"), py::arg("page"), py::arg("s_lo"), py::arg("s_hi"), py::arg("t_lo"), py::arg("t_hi"),
          py::arg("format") = "ascii");
}
