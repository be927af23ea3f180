#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyparr/cli.hpp"
#include "hyparr/corpus.hpp"
#include "hyparr/criteria.hpp"
#include "hyparr/error.hpp"
#include "hyparr/io.hpp"
#include "hyparr/oracles.hpp"

namespace py = pybind11;
using namespace hyparr;

namespace {

py::object to_py(const io::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ to_py(const Integer& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

CentralArrangement make_arrangement(std::size_t dim, const std::vector<std::vector<std::string>>& rows,
                                    std::vector<std::string> labels) {
    std::vector<RationalVector> raw;
    for (const auto& r : rows) {
        RationalVector v;
        for (const auto& s : r) v.push_back(parse_rational(s));
        raw.push_back(std::move(v));
    }
    return canonicalize(raw, dim, std::move(labels));
}

std::vector<py::int_> poly(const IntPolynomial& p) {
    std::vector<py::int_> out;
    for (auto c : p.coefficients()) out.emplace_back(c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_hyparr, m) {
    m.doc() = "Exact invariants and freeness checks for rational hyperplane arrangements";

    static py::exception<Error> error(m, "HyparrError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<CentralArrangement>(m, "CentralArrangement")
        .def(py::init(&make_arrangement), py::arg("dim"), py::arg("rows"), py::arg("labels") = std::vector<std::string>{},
             "Rows are lists of integer or \"p/q\" strings.")
        .def_property_readonly("dim", &CentralArrangement::dim)
        .def_property_readonly("rank", &CentralArrangement::rank)
        .def("__len__", &CentralArrangement::size)
        .def_property_readonly("forms",
                               [](const CentralArrangement& a) {
                                   std::vector<std::vector<py::int_>> out;
                                   for (const auto& f : a.forms()) {
                                       std::vector<py::int_> row;
                                       for (const auto& c : f.coefficients()) row.push_back(to_py(c));
                                       out.push_back(std::move(row));
                                   }
                                   return out;
                               })
        .def("label", &CentralArrangement::label)
        .def("__eq__", [](const CentralArrangement& a, const CentralArrangement& b) { return a == b; })
        .def("__repr__", [](const CentralArrangement& a) { return "CentralArrangement(" + io::to_json(a).dump() + ")"; });

    py::class_<Multiarrangement>(m, "Multiarrangement")
        .def(py::init<CentralArrangement, std::vector<int>>(), py::arg("base"), py::arg("mult"))
        .def_readonly("base", &Multiarrangement::base)
        .def_readonly("mult", &Multiarrangement::mult)
        .def_property_readonly("dim", &Multiarrangement::dim)
        .def("total", &Multiarrangement::total)
        .def("is_simple", &Multiarrangement::is_simple)
        .def("__repr__", [](const Multiarrangement& x) { return "Multiarrangement(" + io::to_json(x).dump() + ")"; });

    m.def("parse_arrangement", [](const std::string& text) { return io::parse_arrangement(text); });
    m.def("simple", &Multiarrangement::simple);

    m.def("char_poly", [](const CentralArrangement& a) { return poly(char_poly(a)); },
          "Coefficients of chi(A, t), constant term first.");
    m.def("reduced_char_poly", [](const CentralArrangement& a) { return poly(reduced_char_poly(a)); });
    m.def("chamber_count", [](const CentralArrangement& a) { return chamber_count(a); });
    m.def("ziegler_restriction", &ziegler_restriction, py::arg("a"), py::arg("h0"));
    m.def("b_coefficients", [](const CentralArrangement& a, std::size_t h0) { return b_coefficients(a, h0).b; });

    m.def(
        "find_free_basis",
        [](const Multiarrangement& x, std::optional<int> bound) {
            return to_py(io::to_json(find_free_basis(x, bound.value_or(x.support().total()))));
        },
        py::arg("m"), py::arg("bound") = py::none());
    m.def("rank2_exponents", [](const Multiarrangement& x) { return rank2_exponents(x).exponents; });
    m.def(
        "sigma_coefficients",
        [](const Multiarrangement& x, std::optional<int> bound) {
            std::vector<std::optional<std::int64_t>> out;
            for (const auto& s : sigma_coefficients(x, bound.value_or(x.support().total()))) out.push_back(s.value);
            return out;
        },
        py::arg("m"), py::arg("bound") = py::none());

    m.def(
        "compare_coefficients",
        [](const CentralArrangement& a, std::size_t h0, std::optional<int> bound, bool assert_tame) {
            return to_py(io::to_json(compare_coefficients(a, h0, bound, assert_tame)));
        },
        py::arg("a"), py::arg("h0"), py::arg("bound") = py::none(), py::arg("assert_tame") = false);
    m.def("mca_check", &mca_check, py::arg("a"), py::arg("h0"), py::arg("bound") = py::none());
    m.def("yoshinaga_3d", [](const CentralArrangement& a, std::size_t h0) { return to_py(io::to_json(yoshinaga_3d(a, h0))); });
    m.def(
        "abe_yoshinaga_free_check",
        [](const CentralArrangement& a, std::size_t h0, std::optional<int> bound) {
            return to_py(io::to_json(abe_yoshinaga_free_check(a, h0, bound)));
        },
        py::arg("a"), py::arg("h0"), py::arg("bound") = py::none());

    m.def("finite_field_char_poly",
          [](const CentralArrangement& a) { return poly(oracles::finite_field_char_poly(a).poly); });
    m.def("region_count_recursion", [](const CentralArrangement& a) { return oracles::region_count_recursion(a); });

    m.def("corpus_names", [] {
        std::vector<std::string> out;
        for (const auto& e : corpus::entries()) out.push_back(e.name);
        return out;
    });
    m.def("corpus_get", [](const std::string& name) { return corpus::get(name).arrangement; });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
