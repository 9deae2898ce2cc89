#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schubert/errors.hpp"
#include "schubert/expand.hpp"
#include "schubert/json_io.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/positivity.hpp"
#include "schubert/selftest.hpp"
#include "schubert/table.hpp"

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace schubert;

namespace {

py::dict expansion_to_dict(const Expansion& e) {
    py::dict out;
    for (const auto& [w, coeff] : e.coefficients)
        out[py::tuple(py::cast(w.word()))] = coeff;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact torus-equivariant Schubert calculus for the type-A flag variety";

    py::register_exception<NotDivisibleError>(m, "NotDivisibleError");
    py::register_exception<NotTranslationInvariantError>(m, "NotTranslationInvariantError");

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("word"))
        .def_static("identity", &Permutation::identity)
        .def_static("longest", &Permutation::longest)
        .def_static("transposition", &Permutation::transposition, py::arg("k"), py::arg("n"))
        .def_property_readonly("word", &Permutation::word)
        .def_property_readonly("n", &Permutation::n)
        .def("length", &Permutation::length)
        .def("inverse", &Permutation::inverse)
        .def("descents", &Permutation::descents)
        .def("rank", &Permutation::rank, py::arg("p"), py::arg("q"))
        .def("__mul__", [](const Permutation& u, const Permutation& v) { return u * v; })
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__hash__",
             [](const Permutation& w) { return py::hash(py::tuple(py::cast(w.word()))); })
        .def("__repr__", [](const Permutation& w) { return "Permutation(" + w.to_string() + ")"; });

    m.def("bruhat_leq", &bruhat_leq, py::arg("u"), py::arg("w"));
    m.def("all_permutations", &all_permutations, py::arg("n"));

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<>())
        .def("is_zero", &Polynomial::is_zero)
        .def("total_degree",
             [](const Polynomial& p) -> py::object {
                 auto d = p.total_degree();
                 return d ? py::cast(*d) : py::none();
             })
        .def("is_homogeneous", &Polynomial::is_homogeneous, py::arg("degree"))
        .def("__add__", [](const Polynomial& p, const Polynomial& q) { return p + q; })
        .def("__sub__", [](const Polynomial& p, const Polynomial& q) { return p - q; })
        .def("__mul__", [](const Polynomial& p, const Polynomial& q) { return p * q; })
        .def("__neg__", [](const Polynomial& p) { return -p; })
        .def("__eq__", [](const Polynomial& p, const Polynomial& q) { return p == q; })
        .def("to_json", [](const Polynomial& p) { return poly_to_json(p).dump(); })
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

    m.def("x", [](int i) { return Polynomial::variable(xvar(i)); });
    m.def("t", [](int i) { return Polynomial::variable(tvar(i)); });
    m.def("alpha", [](int i) { return Polynomial::variable(avar(i)); });
    m.def("constant", [](long c) { return Polynomial::constant(mpz_class(c)); });

    py::class_<RestrictionVector>(m, "RestrictionVector")
        .def_readonly("n", &RestrictionVector::n)
        .def_readonly("values", &RestrictionVector::values)
        .def("pointwise_mul", &RestrictionVector::pointwise_mul);

    py::class_<SchubertTable>(m, "SchubertTable")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &SchubertTable::n)
        .def("group", &SchubertTable::group)
        .def("entry", py::overload_cast<const Permutation&>(&SchubertTable::entry, py::const_))
        .def("localize",
             py::overload_cast<const Permutation&, const Permutation&>(&SchubertTable::localize,
                                                                       py::const_),
             py::arg("v"), py::arg("w"))
        .def("restriction", &SchubertTable::restriction)
        .def("opposite_restriction", &SchubertTable::opposite_restriction);

    m.def("divided_difference", &divided_difference, py::arg("i"), py::arg("p"));
    m.def(
        "structure_constants",
        [](const SchubertTable& table, const Permutation& u, const Permutation& v) {
            return expansion_to_dict(structure_constants(table, u, v));
        },
        py::arg("table"), py::arg("u"), py::arg("v"),
        "Coefficients c_uv^w as a dict keyed by one-line tuples of w.");
    m.def("pushforward", &pushforward, py::arg("table"), py::arg("f"));
    m.def("duality_constant", &duality_constant, py::arg("table"), py::arg("u"), py::arg("v"),
          py::arg("w"));

    m.def("to_alpha", &to_alpha, py::arg("p"), py::arg("n"));
    m.def("is_graham_positive",
          [](const Polynomial& p) { return is_graham_positive(p).positive; });
    m.def(
        "verify_positivity",
        [](int n, int jobs) {
            SchubertTable table(n);
            PositivityReport r = verify_all(table, {.jobs = jobs});
            py::dict out;
            out["n"] = r.n;
            out["pairs_checked"] = r.pairs_checked;
            out["nonzero_constants"] = r.nonzero_constants;
            out["all_positive"] = r.all_positive;
            out["max_coefficient"] = r.max_coefficient.get_str();
            out["elapsed_seconds"] = r.elapsed_seconds;
            return out;
        },
        py::arg("n"), py::arg("jobs") = 0);

    m.def("selftest", [] {
        std::ostringstream os;
        bool ok = run_selftest(os);
        return py::make_tuple(ok, os.str());
    });
}
