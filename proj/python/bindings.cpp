#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocycle/equations.hpp"
#include "cocycle/error.hpp"
#include "cocycle/fourier.hpp"
#include "cocycle/group.hpp"
#include "cocycle/lemma.hpp"
#include "cocycle/repr.hpp"
#include "cocycle/solver.hpp"

namespace py = pybind11;
using namespace cocycle;

// The library hands out shared_ptr<const Group>; pybind11 holders must be
// mutable, so Group is bound with shared_ptr<Group> and the const pointer is
// converted at the boundary.
namespace pybind11::detail {
template <>
struct type_caster<std::shared_ptr<const Group>> {
    PYBIND11_TYPE_CASTER(std::shared_ptr<const Group>, const_name("Group"));

    bool load(handle src, bool convert) {
        copyable_holder_caster<Group, std::shared_ptr<Group>> inner;
        if (!inner.load(src, convert)) return false;
        value = static_cast<std::shared_ptr<Group>&>(inner);
        return true;
    }

    static handle cast(const std::shared_ptr<const Group>& src, return_value_policy, handle parent) {
        return type_caster<std::shared_ptr<Group>>::cast(std::const_pointer_cast<Group>(src),
                                                         return_value_policy::take_ownership, parent);
    }
};
}  // namespace pybind11::detail

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const CMatrix& m) {
    CArray a({m.rows(), m.cols()});
    auto r = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return a;
}

CMatrix from_numpy(const CArray& a) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
    auto r = a.unchecked<2>();
    CMatrix m(a.shape(0), a.shape(1));
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
    return m;
}

CArray values_to_numpy(const std::vector<Complex>& v) {
    CArray a(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), a.mutable_data());
    return a;
}

GroupFunction make_function(const GroupPtr& g, const CArray& values) {
    if (values.ndim() != 1) throw py::value_error("expected a 1-d array of values");
    return {g, std::vector<Complex>(values.data(), values.data() + values.size())};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-group harmonic analysis and the d'Alembert / Wilson / long equations";

    auto base = py::register_exception<Error>(m, "CocycleError");
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

    py::class_<Group, std::shared_ptr<Group>>(m, "Group")
        .def_static("from_cayley_table", &Group::from_cayley_table, py::arg("names"),
                    py::arg("table"), py::arg("max_order") = kDefaultMaxOrder)
        .def_static("builtin", &builtin::by_name, py::arg("name"),
                    "Builtin group by name: z6, d4, q8, s3, a4, z2xq8, ...")
        .def_property_readonly("order", &Group::order)
        .def_property_readonly("names", &Group::names)
        .def_property_readonly("table", &Group::table)
        .def_property_readonly("identity", &Group::identity)
        .def_property_readonly("inverse", &Group::inverse_table)
        .def("mul", &Group::mul)
        .def("inv", &Group::inv)
        .def("is_abelian", &Group::is_abelian)
        .def("element_order", &Group::element_order)
        .def("__len__", &Group::order);

    m.def("conjugacy_classes", [](const GroupPtr& g) { return conjugacy_classes(*g); });

    py::class_<GroupFunction>(m, "GroupFunction")
        .def(py::init(&make_function), py::arg("group"), py::arg("values"))
        .def_readonly("group", &GroupFunction::group)
        .def_property_readonly("values",
                               [](const GroupFunction& f) { return values_to_numpy(f.values); })
        .def("sup_norm", &GroupFunction::sup_norm)
        .def("__len__", &GroupFunction::size);

    py::class_<UnitaryRep>(m, "UnitaryRep")
        .def_property_readonly("dim", &UnitaryRep::dim)
        .def_property_readonly("group", &UnitaryRep::group)
        .def("matrix", [](const UnitaryRep& r, Element x) { return to_numpy(r(x)); })
        .def("invariant_error", &UnitaryRep::invariant_error);

    py::class_<IrrepBasis>(m, "IrrepBasis")
        .def_readonly("group", &IrrepBasis::group)
        .def_readonly("irreps", &IrrepBasis::irreps)
        .def("__len__", &IrrepBasis::size)
        .def("__getitem__", [](const IrrepBasis& b, std::size_t k) { return b.irreps.at(k); });

    m.def("regular_representation", &regular_representation);
    m.def("decompose_irreps",
          [](const GroupPtr& g, std::uint64_t seed) { return decompose_irreps(g, seed); },
          py::arg("group"), py::arg("seed") = 42);
    m.def("character", &character);
    m.def("is_irreducible", &is_irreducible, py::arg("rep"), py::arg("tol") = 1e-8);
    m.def("are_equivalent", &are_equivalent, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);
    m.def("su2_eligible", &su2_eligible, py::arg("rep"), py::arg("tol") = 1e-8);
    m.def("schur_orthogonality_error", &schur_orthogonality_error);

    m.def(
        "fourier_transform",
        [](const GroupFunction& f, const IrrepBasis& basis) {
            std::vector<CArray> out;
            for (const auto& b : transform(f, basis).blocks) out.push_back(to_numpy(b));
            return out;
        },
        py::arg("f"), py::arg("basis"));
    m.def(
        "fourier_inverse",
        [](const std::vector<CArray>& blocks, const IrrepBasis& basis) {
            FourierCoefficients c{&basis, {}};
            for (const auto& b : blocks) c.blocks.push_back(from_numpy(b));
            if (c.blocks.size() != basis.size()) throw py::value_error("one block per irrep");
            return inverse(c);
        },
        py::arg("blocks"), py::arg("basis"));
    m.def(
        "translate",
        [](const GroupFunction& f, Element y, const std::string& side) {
            if (side != "left" && side != "right") throw py::value_error("side is left|right");
            return translate(f, y, side == "left" ? Side::left : Side::right);
        },
        py::arg("f"), py::arg("y"), py::arg("side"));

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("max_residual", &ResidualReport::max_residual)
        .def_readonly("argmax", &ResidualReport::argmax)
        .def_readonly("satisfied", &ResidualReport::satisfied)
        .def_readonly("projected_to_real", &ResidualReport::projected_to_real);

    m.def("dalembert_residual", &dalembert_residual, py::arg("f"), py::arg("tol") = kDefaultTol);
    m.def("wilson_residual", &wilson_residual, py::arg("f"), py::arg("g"),
          py::arg("tol") = kDefaultTol);
    m.def("long_residual", &long_residual, py::arg("f"), py::arg("tol") = kDefaultTol);
    m.def("is_central", &is_central, py::arg("f"), py::arg("tol") = kDefaultTol);
    m.def("check_square_identity", &check_square_identity, py::arg("f"),
          py::arg("tol") = kDefaultTol);
    m.def(
        "delta_operator",
        [](const UnitaryRep& r, const GroupFunction& f, Element y, double tol) {
            return to_numpy(delta_operator(r, f, y, tol));
        },
        py::arg("rep"), py::arg("f"), py::arg("y"), py::arg("tol") = kDefaultTol);
    m.def("verify_delta_square", &verify_delta_square, py::arg("rep"), py::arg("f"),
          py::arg("tol") = kDefaultTol);

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_property_readonly("witnesses",
                               [](const LemmaReport& r) {
                                   std::vector<CArray> out;
                                   for (const auto& v : r.witnesses) out.push_back(values_to_numpy(v));
                                   return out;
                               })
        .def_readonly("hypothesis_holds", &LemmaReport::hypothesis_holds)
        .def_property_readonly("conclusion",
                               [](const LemmaReport& r) { return std::string(to_string(r.conclusion)); });
    m.def("verify_small_dimension_lemma", &verify_small_dimension_lemma, py::arg("rep"),
          py::arg("tol") = kDefaultTol);

    py::class_<SolutionCertificate>(m, "SolutionCertificate")
        .def_readonly("f", &SolutionCertificate::f)
        .def_property_readonly("witness_kind",
                               [](const SolutionCertificate& s) {
                                   return std::string(to_string(s.witness.kind));
                               })
        .def_property_readonly("witness_index",
                               [](const SolutionCertificate& s) { return s.witness.irrep_index; })
        .def_property_readonly(
            "equation", [](const SolutionCertificate& s) { return std::string(to_string(s.equation)); })
        .def_readonly("residual", &SolutionCertificate::residual);

    py::class_<WilsonSolutionSpace>(m, "WilsonSolutionSpace")
        .def_readonly("g", &WilsonSolutionSpace::g)
        .def_readonly("g_index", &WilsonSolutionSpace::g_index)
        .def_readonly("f_basis", &WilsonSolutionSpace::f_basis)
        .def_readonly("dimension", &WilsonSolutionSpace::dimension)
        .def_readonly("coefficient_span_dimension", &WilsonSolutionSpace::coefficient_span_dimension);

    m.def("solve_dalembert", &solve_dalembert);
    m.def("solve_long", &solve_long);
    m.def("solve_wilson", &solve_wilson);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("solutions", &OracleResult::solutions)
        .def_readonly("converged", &OracleResult::converged)
        .def_readonly("dropped", &OracleResult::dropped)
        .def_readonly("deflated_runs", &OracleResult::deflated_runs);
    m.def(
        "gauss_newton_oracle",
        [](const GroupPtr& g, const std::string& equation, std::size_t starts, std::uint64_t seed,
           unsigned threads) {
            OracleOptions opts;
            opts.starts = starts;
            opts.seed = seed;
            opts.threads = threads;
            py::gil_scoped_release release;
            return gauss_newton_oracle(g, parse_equation(equation), opts);
        },
        py::arg("group"), py::arg("equation") = "dalembert", py::arg("starts") = 500,
        py::arg("seed") = 42, py::arg("threads") = 1);

    py::class_<MatchReport::Match>(m, "Match")
        .def_readonly("found_index", &MatchReport::Match::found_index)
        .def_readonly("constructed_index", &MatchReport::Match::constructed_index)
        .def_readonly("distance", &MatchReport::Match::distance);
    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("matches", &MatchReport::matches)
        .def_readonly("trivial_found", &MatchReport::trivial_found)
        .def_readonly("unmatched_found", &MatchReport::unmatched_found)
        .def_readonly("unmatched_constructed", &MatchReport::unmatched_constructed)
        .def("complete", &MatchReport::complete);
    m.def("match_solutions", &match_solutions, py::arg("found"), py::arg("constructed"),
          py::arg("tol") = 1e-6);
}
