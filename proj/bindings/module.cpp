#include "propq/cross_validate.hpp"
#include "propq/errors.hpp"
#include "propq/explain.hpp"
#include "propq/oracle.hpp"
#include "propq/roots.hpp"
#include "propq/verdicts.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

namespace pybind11::detail {

// propq::Int <-> Python int, via decimal strings; both sides are
// arbitrary-precision so the round trip is exact.
template <>
struct type_caster<propq::Int> {
    PYBIND11_TYPE_CASTER(propq::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = propq::Int(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const propq::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

std::string classification_name(propq::Classification c) {
    return c == propq::Classification::Integer ? "integer" : "proper_rational";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    using namespace propq;

    m.doc() = "Exact rational arithmetic: standard forms, integrality verdicts, "
              "and brute-force cross-checks";

    py::register_exception<zero_denominator>(m, "ZeroDenominatorError", PyExc_ValueError);
    py::register_exception<recip_of_zero>(m, "RecipOfZeroError", PyExc_ZeroDivisionError);
    py::register_exception<not_proper>(m, "NotProperError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<invariant_violation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<CanonicalRational>(m, "Rational")
        .def(py::init<>())
        .def(py::init<Int>(), py::arg("value"))
        .def_property_readonly("numerator", &CanonicalRational::numerator)
        .def_property_readonly("denominator", &CanonicalRational::denominator)
        .def("is_integer", &CanonicalRational::is_integer)
        .def("is_proper", &CanonicalRational::is_proper)
        .def("is_zero", &CanonicalRational::is_zero)
        .def("__eq__",
             [](const CanonicalRational& a, const CanonicalRational& b) { return a == b; })
        .def("__str__", [](const CanonicalRational& q) { return to_string(q); })
        .def("__repr__", [](const CanonicalRational& q) {
            return "Rational(" + q.numerator().str() + ", " + q.denominator().str() + ")";
        });

    m.def("gcd", [](const Int& u, const Int& w) { return propq::gcd(u, w); },
          py::arg("u"), py::arg("w"));
    m.def("divides", &divides, py::arg("u"), py::arg("w"));
    m.def("normalize", &normalize, py::arg("numerator"), py::arg("denominator"));
    m.def("classify",
          [](const CanonicalRational& q) { return classification_name(classify(q)); },
          py::arg("q"));
    m.def("add", &add, py::arg("q1"), py::arg("q2"));
    m.def("mul", &mul, py::arg("q1"), py::arg("q2"));
    m.def("negate", &negate, py::arg("q"));
    m.def("reciprocal", &reciprocal, py::arg("q"));

    py::enum_<ReciprocalCase>(m, "ReciprocalCase")
        .value("UNIT_NUMERATOR_INTEGER", ReciprocalCase::UnitNumeratorInteger)
        .value("POSITIVE_PROPER", ReciprocalCase::PositiveProper)
        .value("NEGATIVE_PROPER", ReciprocalCase::NegativeProper);

    py::class_<ReciprocalVerdict>(m, "ReciprocalVerdict")
        .def_readonly("case_tag", &ReciprocalVerdict::case_tag)
        .def_readonly("result", &ReciprocalVerdict::result);

    py::class_<ScaleVerdict>(m, "ScaleVerdict")
        .def_readonly("is_integer", &ScaleVerdict::is_integer)
        .def_readonly("witness_quotient", &ScaleVerdict::witness_quotient)
        .def_readonly("result", &ScaleVerdict::result);

    py::class_<SumVerdict>(m, "SumVerdict")
        .def_readonly("is_integer", &SumVerdict::is_integer)
        .def_readonly("denominators_equal", &SumVerdict::denominators_equal)
        .def_readonly("divisibility_holds", &SumVerdict::divisibility_holds)
        .def_readonly("result", &SumVerdict::result);

    py::class_<ProductVerdict>(m, "ProductVerdict")
        .def_readonly("is_integer", &ProductVerdict::is_integer)
        .def_readonly("b1_divides_c2", &ProductVerdict::b1_divides_c2)
        .def_readonly("b2_divides_c1", &ProductVerdict::b2_divides_c1)
        .def_readonly("result", &ProductVerdict::result);

    py::class_<JointVerdict>(m, "JointVerdict")
        .def_readonly("sum_is_integer", &JointVerdict::sum_is_integer)
        .def_readonly("product_is_integer", &JointVerdict::product_is_integer)
        .def_readonly("both_inputs_integer", &JointVerdict::both_inputs_integer);

    m.def("reciprocal_verdict", &reciprocal_verdict, py::arg("r"));
    m.def("shift_verdict", &shift_verdict, py::arg("r"), py::arg("d"));
    m.def("scale_verdict", &scale_verdict, py::arg("r"), py::arg("i"));
    m.def("sum_verdict", &sum_verdict, py::arg("r1"), py::arg("r2"));
    m.def("product_verdict", &product_verdict, py::arg("r1"), py::arg("r2"));
    m.def("joint_verdict", &joint_verdict, py::arg("q1"), py::arg("q2"));

    py::class_<MonicPoly>(m, "MonicPoly")
        .def(py::init<std::vector<Int>>(), py::arg("coefficients"))
        .def_property_readonly("degree", &MonicPoly::degree)
        .def_property_readonly("coefficients", &MonicPoly::coefficients)
        .def("__str__", [](const MonicPoly& p) { return to_string(p); })
        .def("__repr__", [](const MonicPoly& p) { return "MonicPoly(" + to_string(p) + ")"; });

    m.def("eval_poly", &eval_poly, py::arg("p"), py::arg("q"));
    m.def("quadratic_from_sum_product", &quadratic_from_sum_product,
          py::arg("i1"), py::arg("i2"));
    m.def("monic_rational_roots", &monic_rational_roots, py::arg("p"));
    m.def("verify_no_proper_root", &verify_no_proper_root,
          py::arg("p"), py::arg("search_bound"));

    py::class_<oracle::Box>(m, "Box")
        .def(py::init<Int, Int>(), py::arg("max_abs_numerator"), py::arg("max_denominator"))
        .def_property_readonly("max_abs_numerator", &oracle::Box::max_abs_numerator)
        .def_property_readonly("max_denominator", &oracle::Box::max_denominator);

    py::class_<oracle::CounterexampleReport>(m, "CounterexampleReport")
        .def_readonly("found", &oracle::CounterexampleReport::found)
        .def_readonly("pair", &oracle::CounterexampleReport::pair)
        .def_readonly("pairs_scanned", &oracle::CounterexampleReport::pairs_scanned);

    m.def("enumerate_proper", &oracle::enumerate_proper, py::arg("box"));
    m.def("direct_is_integer", &oracle::direct_is_integer, py::arg("q"));
    m.def("search_theorem7", &oracle::search_theorem7, py::arg("box"));
    m.def(
        "cross_validate",
        [](const oracle::Box& box, const std::string& which) {
            oracle::TheoremSelector selector;
            if (which == "t3")
                selector = oracle::TheoremSelector::T3;
            else if (which == "t4")
                selector = oracle::TheoremSelector::T4;
            else if (which == "t5")
                selector = oracle::TheoremSelector::T5;
            else
                throw py::value_error("theorem must be one of 't3', 't4', 't5'");
            return oracle::cross_validate(box, selector);
        },
        py::arg("box"), py::arg("theorem"));

    m.def(
        "evaluate",
        [](const std::string& text) { return cli::evaluate(*cli::parse(text)); },
        py::arg("expression"),
        "Parse and exactly evaluate an expression in the CLI grammar.");
    m.def(
        "explain_json",
        [](const std::string& text) {
            return cli::report_to_json(cli::explain(*cli::parse(text), text)).dump(2);
        },
        py::arg("expression"),
        "JSON verdict report for an expression, as served by the CLI.");
}
