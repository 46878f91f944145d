#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "skewcoh/catcalc.hpp"
#include "skewcoh/cli.hpp"
#include "skewcoh/errors.hpp"
#include "skewcoh/focused.hpp"
#include "skewcoh/models.hpp"
#include "skewcoh/render.hpp"
#include "skewcoh/seqcalc.hpp"
#include "skewcoh/syntax.hpp"

namespace py = pybind11;
using namespace skewcoh;

namespace {

Formula as_formula(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_formula(o.cast<std::string>());
  return o.cast<Formula>();
}

Sequent as_sequent(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_sequent(o.cast<std::string>());
  return o.cast<Sequent>();
}

CatTerm as_term(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_term(o.cast<std::string>());
  return o.cast<CatTerm>();
}

}  // namespace

PYBIND11_MODULE(_skewcoh, m) {
  m.doc() = "Maps of the free skew monoidal category via focused sequent calculus";

  py::register_exception<SyntaxError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "IllTypedError", PyExc_TypeError);
  py::register_exception<RuleError>(m, "RuleError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_KeyError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& s) { return parse_formula(s); }), py::arg("text"))
      .def_static("atom", &Formula::atom)
      .def_static("unit", &Formula::unit)
      .def_static("tensor", &Formula::tensor)
      .def_property_readonly("is_atom", &Formula::is_atom)
      .def_property_readonly("is_unit", &Formula::is_unit)
      .def_property_readonly("is_tensor", &Formula::is_tensor)
      .def_property_readonly("name", &Formula::name)
      .def_property_readonly("left", [](const Formula& f) {
        if (!f.is_tensor()) throw py::value_error("not a tensor");
        return f.left();
      })
      .def_property_readonly("right", [](const Formula& f) {
        if (!f.is_tensor()) throw py::value_error("not a tensor");
        return f.right();
      })
      .def_property_readonly("connectives", &Formula::connectives)
      .def_property_readonly("frontier", [](const Formula& f) { return frontier(f); })
      .def("__str__", &print_formula)
      .def("__repr__", [](const Formula& f) { return "Formula('" + print_formula(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash);

  py::class_<Sequent>(m, "Sequent")
      .def(py::init([](const std::string& s) { return parse_sequent(s); }), py::arg("text"))
      .def_readonly("stoup", &Sequent::stoup)
      .def_readonly("context", &Sequent::context)
      .def_readonly("succedent", &Sequent::succedent)
      .def("__str__", &print_sequent)
      .def("__repr__", [](const Sequent& s) { return "Sequent('" + print_sequent(s) + "')"; })
      .def("__eq__", [](const Sequent& a, const Sequent& b) { return a == b; })
      .def("__hash__", [](const Sequent& s) { return SequentHash{}(s); });

  py::class_<CatTerm>(m, "Term")
      .def(py::init([](const std::string& s) { return parse_term(s); }), py::arg("text"))
      .def_property_readonly("dom", [](const CatTerm& t) { return infer_type(t).dom; })
      .def_property_readonly("cod", [](const CatTerm& t) { return infer_type(t).cod; })
      .def_property_readonly("size", &CatTerm::size)
      .def("structured", [](const CatTerm& t) { return to_structured(t); })
      .def("__str__", &print_term)
      .def("__repr__", [](const CatTerm& t) { return "Term('" + print_term(t) + "')"; })
      .def("__eq__", [](const CatTerm& a, const CatTerm& b) { return a == b; })
      .def("__hash__", &CatTerm::hash);

  py::class_<FocDeriv>(m, "FocusedDerivation")
      .def_property_readonly("rule", [](const FocDeriv& d) { return std::string(rule_name(d.rule())); })
      .def_property_readonly("phase", [](const FocDeriv& d) { return d.phase() == Phase::L ? "L" : "R"; })
      .def_property_readonly("conclusion", &FocDeriv::conclusion)
      .def_property_readonly("premises", [](const FocDeriv& d) {
        return std::vector<FocDeriv>(d.premises().begin(), d.premises().end());
      })
      .def_property_readonly("size", &FocDeriv::size)
      .def("term", [](const FocDeriv& d) { return sound(emb_l(d)); })
      .def("text", [](const FocDeriv& d) { return render_text(d); })
      .def("latex", [](const FocDeriv& d) { return render_latex(d); })
      .def("structured", [](const FocDeriv& d) { return to_structured(d); })
      .def_static("from_structured", [](const std::string& s) { return foc_deriv_from_structured(s); })
      .def("__str__", [](const FocDeriv& d) { return render_text(d); })
      .def("__eq__", [](const FocDeriv& a, const FocDeriv& b) { return a == b; })
      .def("__hash__", &FocDeriv::hash);

  m.def("parse_formula", [](const std::string& s) { return parse_formula(s); });
  m.def("parse_sequent", [](const std::string& s) { return parse_sequent(s); });
  m.def("parse_term", [](const std::string& s) { return parse_term(s); });

  m.def("derivable", [](const py::object& s) { return derivable(as_sequent(s)); }, py::arg("sequent"),
        "Whether the sequent has a cut-free derivation.");
  m.def("focderivs", [](const py::object& s) { return focderivs(as_sequent(s)); },
        py::arg("sequent"), "Every focused derivation of the sequent, each once.");
  m.def("decide_equal",
        [](const py::object& f, const py::object& g) { return decide_equal(as_term(f), as_term(g)); },
        py::arg("f"), py::arg("g"), "Equality of the maps denoted by two terms of the same type.");
  m.def("normal_form", [](const py::object& f) { return normal_form(as_term(f)); }, py::arg("f"));
  m.def("fskmaps",
        [](const py::object& a, const py::object& c) { return fskmaps(as_formula(a), as_formula(c)); },
        py::arg("dom"), py::arg("cod"), "One term per map dom => cod.");
  m.def("hom_count",
        [](const py::object& a, const py::object& c) { return hom_count(as_formula(a), as_formula(c)); },
        py::arg("dom"), py::arg("cod"));
  m.def("ptd_equal",
        [](const py::object& f, const py::object& g, const std::string& model) {
          auto parsed = parse_model(model);
          const auto* ptd = std::get_if<PtdModel>(&parsed);
          if (!ptd) throw py::value_error("expected a ptd model");
          return check_ptd_equal(as_term(f), as_term(g), *ptd);
        },
        py::arg("f"), py::arg("g"), py::arg("model"),
        "Compare the two maps in a pointed-set model given in the model file format.");
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface; returns (exit code, stdout, stderr).");
}
