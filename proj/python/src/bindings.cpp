#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kummer/arith.hpp"
#include "kummer/autgroup.hpp"
#include "kummer/cli.hpp"
#include "kummer/error.hpp"
#include "kummer/exterior.hpp"
#include "kummer/lefschetz.hpp"
#include "kummer/symplectic.hpp"

namespace py = pybind11;
using namespace kummer;

namespace {

TorsionElement translation(const std::array<std::int64_t, 4>& coords,
                           std::int64_t n) {
  return TorsionElement(coords, n);
}

RationalMatrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const auto& tok : row)
      out.back().push_back(parse_rational(tok));
  }
  return RationalMatrix::from_rows(std::move(out));
}

py::dict certificate_dict(const CertificateReport& c) {
  py::list classes;
  for (const auto& cls : c.translation_witnesses) {
    py::dict d;
    d["d"] = cls.d;
    d["p"] = cls.p;
    d["count"] = cls.count;
    d["lefschetz"] = cls.lefschetz_value;
    d["euler"] = cls.euler_value;
    classes.append(d);
  }
  py::dict out;
  out["n"] = c.n;
  out["total_elements"] = c.total_elements;
  out["euler"] = c.euler_value;
  out["translation_witness_count"] = c.translation_witness_count;
  out["translation_classes"] = classes;
  out["inversion_count"] = c.inversion_witnesses.count;
  out["tau_nonzero"] = c.inversion_witnesses.tau_nonzero;
  out["negates_tau"] = c.inversion_witnesses.negates_tau;
  out["verdict"] = to_string(c.verdict);
  out["counterexample"] =
      c.counterexample ? py::object(py::str(to_string(*c.counterexample)))
                       : py::object(py::none());
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certificates for the action of T(n).<iota> on the cohomology of "
            "generalized Kummer manifolds";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("divisors", &divisors, py::arg("n"));
  m.def("sigma", &sigma, py::arg("n"));
  m.def(
      "torsion_order",
      [](const std::array<std::int64_t, 4>& a, std::int64_t n) {
        return torsion_order(translation(a, n));
      },
      py::arg("a"), py::arg("n"));
  m.def(
      "torsion_codegree",
      [](const std::array<std::int64_t, 4>& a, std::int64_t n) {
        return torsion_codegree(translation(a, n));
      },
      py::arg("a"), py::arg("n"));

  m.def("euler_kummer", &euler_kummer, py::arg("n"));
  m.def("lefschetz_trivial", &lefschetz_trivial, py::arg("n"));
  m.def(
      "lefschetz_translation",
      [](const std::array<std::int64_t, 4>& a, std::int64_t n) {
        return lefschetz_translation(translation(a, n));
      },
      py::arg("a"), py::arg("n"));
  m.def(
      "fixed_locus",
      [](const std::array<std::int64_t, 4>& a, std::int64_t n) {
        auto f = fixed_locus(translation(a, n));
        py::dict d;
        d["p"] = f.p;
        d["d"] = f.d;
        d["component_count"] = f.component_count;
        d["component_level"] = f.component_level;
        return d;
      },
      py::arg("a"), py::arg("n"));
  m.def(
      "certify",
      [](std::int64_t n, bool allow_k3) {
        ScanOptions opts;
        opts.allow_k3 = allow_k3;
        return certificate_dict(certify_faithful_on_kernel(n, opts));
      },
      py::arg("n"), py::arg("allow_k3") = false);

  m.def(
      "compose",
      [](const std::string& g, const std::string& h, std::int64_t n) {
        return to_string(compose(parse_element(g, n), parse_element(h, n)));
      },
      py::arg("g"), py::arg("h"), py::arg("n"));
  m.def(
      "element_order",
      [](const std::string& g, std::int64_t n) {
        return element_order(parse_element(g, n));
      },
      py::arg("g"), py::arg("n"));
  m.def("kernel_group_size", &kernel_group_size, py::arg("n"));

  py::class_<Form>(m, "Form")
      .def_static(
          "parse", [](const std::string& s, std::int64_t n) { return parse_form(s, n); },
          py::arg("text"), py::arg("level"))
      .def_property_readonly("level", &Form::level)
      .def("__len__", &Form::size)
      .def("__str__", [](const Form& f) { return to_string(f); })
      .def("__repr__", [](const Form& f) { return "Form(" + to_string(f) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("wedge", &wedge)
      .def("normalize", &normalize)
      .def("is_zero", [](const Form& f) { return is_zero(f); })
      .def(
          "coefficient",
          [](const Form& f, const std::string& monomial) {
            auto parsed = parse_form(monomial, f.level());
            if (parsed.size() != 1 || parsed.terms().front().second != 1)
              throw InputError("expected a single monomial");
            return to_string(coefficient(f, parsed.terms().front().first));
          },
          py::arg("monomial"))
      .def(
          "pullback",
          [](const Form& f, const std::string& g) {
            return pullback(parse_element(g, f.level()), f);
          },
          py::arg("element"))
      .def(
          "permute",
          [](const Form& f, std::vector<std::int32_t> images) {
            return permute(Permutation(std::move(images)), f);
          },
          py::arg("images"));

  m.def("build_tau_tilde", &build_tau_tilde, py::arg("n"));

  m.def(
      "check_fixed_locus_symplectic",
      [](const std::vector<std::vector<std::string>>& h, std::int64_t max_order) {
        auto matrix = to_matrix(h);
        if (!matrix.is_square() || matrix.rows() % 2 != 0)
          throw InputError("matrix must be square of even size");
        auto report = check_fixed_locus_symplectic(
            matrix, SymplecticSpace::standard(matrix.rows() / 2), max_order);
        py::dict d;
        d["order"] = report.order;
        d["fixed_dimension"] = report.fixed_dimension;
        d["even"] = report.even;
        d["nondegenerate"] = report.nondegenerate;
        d["orthogonal"] = report.orthogonal;
        return d;
      },
      py::arg("h"), py::arg("max_order") = default_max_order);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
