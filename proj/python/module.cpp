#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motive/combinatorics.hpp"
#include "motive/expr.hpp"
#include "motive/motive_expr.hpp"
#include "motive/sb2.hpp"

namespace py = pybind11;
using namespace motive;

namespace {

py::object int_to_py(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::dict polynomial_to_dict(const IntPolynomial& p) {
    py::dict out;
    for (const auto& [deg, c] : p.terms()) out[py::int_(deg)] = int_to_py(c);
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

EvalContext make_context(int d, int n, const std::string& ring) {
    return EvalContext{GrassmannSpace(d, n), GrassmannSpace(1, n),
                       CoefficientRing::from_string(ring)};
}

}  // namespace

PYBIND11_MODULE(motive_workbench, m) {
    m.doc() = "exact Schubert calculus, correspondence algebra, and motivic decompositions";
    m.attr("__version__") = "0.1.0";

    m.def(
        "partitions_in_box",
        [](int rows, int cols) {
            std::vector<std::vector<int>> out;
            for (const Partition& p : partitions_in_box(rows, cols)) out.push_back(p.parts());
            return out;
        },
        py::arg("rows"), py::arg("cols"),
        "partitions with at most `rows` parts, each at most `cols`, in graded-lex order");

    m.def(
        "complement",
        [](const std::vector<int>& parts, int rows, int cols) {
            return Partition(parts).complement_in_box(rows, cols).parts();
        },
        py::arg("parts"), py::arg("rows"), py::arg("cols"));

    m.def(
        "gaussian_binomial",
        [](int a, int b) { return polynomial_to_dict(gaussian_binomial(a, b)); }, py::arg("a"),
        py::arg("b"));
    m.def("phi", [](int n) { return polynomial_to_dict(phi(n)); }, py::arg("n"));
    m.def("psi", [](int n) { return polynomial_to_dict(psi(n)); }, py::arg("n"));
    m.def(
        "gensb_polynomial",
        [](int n, int d) { return polynomial_to_dict(gensb_polynomial(n, d)); }, py::arg("n"),
        py::arg("d"));
    m.def("proofgensb_identity", &proofgensb_identity, py::arg("n"), py::arg("d"));

    m.def(
        "lr_coefficient",
        [](const std::vector<int>& outer, const std::vector<int>& inner,
           const std::vector<int>& content) {
            return int_to_py(lr_coefficient(Partition(outer), Partition(inner), Partition(content)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("content"));

    m.def(
        "evaluate",
        [](const std::string& expression, int d, int n, const std::string& ring) {
            return value_to_string(eval(CycleExpr::parse(expression), make_context(d, n, ring)));
        },
        py::arg("expression"), py::arg("d") = 2, py::arg("n") = 5, py::arg("ring") = "Z",
        "evaluate a cycle expression and render the result");

    m.def(
        "evaluate_json",
        [](const std::string& expression, int d, int n, const std::string& ring) {
            return json_to_py(
                value_to_json(eval(CycleExpr::parse(expression), make_context(d, n, ring))));
        },
        py::arg("expression"), py::arg("d") = 2, py::arg("n") = 5, py::arg("ring") = "Z");

    m.def(
        "decompose",
        [](const std::string& series, int rank, const std::string& index,
           const std::vector<int>& dims, const std::vector<int>& removals) {
            GroupDescriptor group(series_from_string(series), rank, Int(index));
            MotiveExpr expr = decompose_chain(FlagDescriptor(group, dims), removals);
            return json_to_py(expr.to_json());
        },
        py::arg("series"), py::arg("rank"), py::arg("index"), py::arg("dims"), py::arg("removals"));

    m.def(
        "krull_schmidt_report",
        [](int rank, const std::string& index) {
            return json_to_py(krull_schmidt_report(rank, Int(index)).to_json());
        },
        py::arg("rank") = 4, py::arg("index") = "5");

    m.def(
        "verify_sb2",
        [](const std::string& modulus, std::uint64_t seed) {
            Sb2Options options;
            options.delta_modulus = Int(modulus);
            options.seed = seed;
            const VerificationReport report = run_all(options);
            return py::make_tuple(report.all_pass(), json_to_py(report.to_json()));
        },
        py::arg("modulus") = "5", py::arg("seed") = 0,
        "run the full verification suite; returns (all_pass, report)");

    // base first: translators run in reverse registration order
    py::register_exception<Error>(m, "WorkbenchError");
    py::register_exception<SyntaxError>(m, "ExprSyntaxError");
    py::register_exception<TypeError>(m, "ExprTypeError");
}
