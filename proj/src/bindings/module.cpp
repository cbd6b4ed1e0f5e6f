#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fna/algebra.hpp"
#include "fna/coalgebra.hpp"
#include "fna/enumeration.hpp"
#include "fna/hopf.hpp"
#include "fna/textio.hpp"
#include "fna/verify.hpp"

namespace py = pybind11;
using namespace fna;

namespace {

py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object as_int = py::module_::import("builtins").attr("int");
  return fraction(as_int(numerator_string(r)), as_int(denominator_string(r)));
}

Rational from_py_scalar(const py::object& value) {
  // int or anything with integral numerator/denominator (Fraction)
  py::object str_of = py::module_::import("builtins").attr("str");
  if (py::isinstance<py::int_>(value))
    return rational_from_strings(py::cast<std::string>(str_of(value)), "1");
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator"))
    return rational_from_strings(py::cast<std::string>(str_of(value.attr("numerator"))),
                                 py::cast<std::string>(str_of(value.attr("denominator"))));
  throw py::type_error("expected an int or a fractions.Fraction");
}

BracketedWord word_from_string(const std::string& text) {
  Element e = eval_string(text);
  if (e.term_count() != 1 || e.terms().begin()->second != 1)
    throw Error("expected a single basis word with coefficient 1, got: " + print_canonical(e));
  return e.terms().begin()->first;
}

py::dict tuple_record_dict(const TupleRecord& t) {
  py::dict d;
  d["inputs"] = t.inputs;
  d["lhs"] = t.lhs;
  d["rhs"] = t.rhs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "free Nijenhuis algebra kernel";

  py::register_exception<Error>(m, "FnaError");

  py::class_<BracketedWord>(m, "Word")
      .def(py::init(&word_from_string), py::arg("text"))
      .def_property_readonly("degree", &BracketedWord::degree)
      .def_property_readonly("width", &BracketedWord::width)
      .def("is_unit", &BracketedWord::is_unit)
      .def("measures",
           [](const BracketedWord& w) {
             Measures ms = measures(w);
             py::dict d;
             d["degree"] = ms.degree;
             d["degree_letters"] = ms.degree_letters;
             d["degree_brackets"] = ms.degree_brackets;
             d["depth"] = ms.depth;
             d["breadth"] = ms.breadth;
             d["width"] = ms.width;
             return d;
           })
      .def("factorize",
           [](const BracketedWord& w) {
             std::vector<BracketedWord> out;
             for (const Factor& f : diamond_factorize(w)) out.push_back(BracketedWord({f}));
             return out;
           })
      .def("__str__", [](const BracketedWord& w) { return print_word(w); })
      .def("__repr__", [](const BracketedWord& w) { return "Word('" + print_word(w) + "')"; })
      .def("__eq__", [](const BracketedWord& a, const BracketedWord& b) { return a == b; },
           py::is_operator())
      .def("__lt__",
           [](const BracketedWord& a, const BracketedWord& b) {
             return compare(a, b) == std::strong_ordering::less;
           },
           py::is_operator())
      .def("__hash__",
           [](const BracketedWord& w) { return py::hash(py::str(print_word(w))); });

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text) { return eval_string(text); }), py::arg("text"))
      .def_static("zero", &Element::zero)
      .def_static("unit", &Element::unit)
      .def_static("from_word",
                  [](const BracketedWord& w) { return Element::from_word(w); })
      .def_static("from_json",
                  [](const std::string& text) { return element_from_json(text); })
      .def("is_zero", &Element::is_zero)
      .def("terms",
           [](const Element& e) {
             py::list out;
             for (const auto& [w, c] : e.terms()) out.append(py::make_tuple(to_fraction(c), w));
             return out;
           })
      .def("bracket", [](const Element& e) { return bracket(e); })
      .def("coproduct", [](const Element& e) { return coproduct(e); })
      .def("counit", [](const Element& e) { return to_fraction(counit(e)); })
      .def("antipode", [](const Element& e) { return antipode(e); })
      .def("homogeneous_components",
           [](const Element& e) {
             py::dict d;
             for (const auto& [n, component] : homogeneous_components(e))
               d[py::int_(n)] = component;
             return d;
           })
      .def("to_json", [](const Element& e) { return to_json(e); })
      .def("latex", [](const Element& e) { return print_latex(e); })
      .def("__str__", [](const Element& e) { return print_canonical(e); })
      .def("__repr__", [](const Element& e) { return "Element('" + print_canonical(e) + "')"; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; }, py::is_operator())
      .def("__add__", [](const Element& a, const Element& b) { return a + b; }, py::is_operator())
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; }, py::is_operator())
      .def("__neg__", [](const Element& a) { return -Element(a); })
      .def("__mul__", [](const Element& a, const Element& b) { return diamond(a, b); },
           py::is_operator())
      .def("__mul__",
           [](const Element& a, const py::object& c) { return from_py_scalar(c) * Element(a); },
           py::is_operator())
      .def("__rmul__",
           [](const Element& a, const py::object& c) { return from_py_scalar(c) * Element(a); },
           py::is_operator());

  py::class_<TensorElement>(m, "Tensor")
      .def("is_zero", &TensorElement::is_zero)
      .def("terms",
           [](const TensorElement& t) {
             py::list out;
             for (const auto& [k, c] : t.terms())
               out.append(py::make_tuple(to_fraction(c), k.first, k.second));
             return out;
           })
      .def("to_json", [](const TensorElement& t) { return to_json(t); })
      .def("__str__", [](const TensorElement& t) { return print_canonical(t); })
      .def("__repr__",
           [](const TensorElement& t) { return "Tensor('" + print_canonical(t) + "')"; })
      .def("__eq__", [](const TensorElement& a, const TensorElement& b) { return a == b; },
           py::is_operator());

  py::class_<LawReport>(m, "LawReport")
      .def_readonly("law", &LawReport::law)
      .def_readonly("instances_checked", &LawReport::instances_checked)
      .def_readonly("passed", &LawReport::passed)
      .def_property_readonly("alphabet",
                             [](const LawReport& r) { return r.space.alphabet; })
      .def_property_readonly("max_degree",
                             [](const LawReport& r) { return r.space.max_degree; })
      .def_property_readonly("arity", [](const LawReport& r) { return r.space.arity; })
      .def_property_readonly("mode",
                             [](const LawReport& r) {
                               return std::string(r.space.exhaustive ? "exhaustive" : "random");
                             })
      .def_property_readonly("counterexample",
                             [](const LawReport& r) -> py::object {
                               if (!r.counterexample) return py::none();
                               return tuple_record_dict(*r.counterexample);
                             })
      .def_property_readonly("witness",
                             [](const LawReport& r) -> py::object {
                               if (!r.witness) return py::none();
                               return tuple_record_dict(*r.witness);
                             })
      .def("to_json", [](const LawReport& r) { return to_json(r); })
      .def("__repr__", [](const LawReport& r) { return print_report(r); });

  m.def("eval_expr", [](const std::string& text) { return eval_string(text); },
        py::arg("text"), "parse an expression and normalize it into the basis");
  m.def("word", &word_from_string, py::arg("text"),
        "parse text that evaluates to a single basis word");
  m.def("diamond", [](const Element& a, const Element& b) { return diamond(a, b); });
  m.def("bracket", [](const Element& a) { return bracket(a); });
  m.def("counit", [](const Element& a) { return to_fraction(counit(a)); });
  m.def("coproduct", [](const Element& a) { return coproduct(a); });
  m.def("antipode", [](const Element& a) { return antipode(a); });

  m.def("convolve",
        [](const py::function& f, const py::function& g, const Element& a) {
          LinearMap lf = [f](const Element& e) { return f(e).cast<Element>(); };
          LinearMap lg = [g](const Element& e) { return g(e).cast<Element>(); };
          return convolve(lf, lg, a);
        },
        py::arg("f"), py::arg("g"), py::arg("a"),
        "convolution (f * g)(a); f and g map Element to Element and must be linear");

  m.def("extend_hom",
        [](const Element& e, const py::object& target) {
          NijenhuisTarget<py::object> t;
          t.zero = target.attr("zero");
          t.unit = target.attr("unit");
          t.add = [target](const py::object& a, const py::object& b) {
            return target.attr("add")(a, b);
          };
          t.scale = [target](const Rational& c, const py::object& v) {
            return target.attr("scale")(to_fraction(c), v);
          };
          t.mul = [target](const py::object& a, const py::object& b) {
            return target.attr("mul")(a, b);
          };
          t.nij = [target](const py::object& v) { return target.attr("nij")(v); };
          t.letter_image = [target](const Letter& l) {
            return target.attr("letter_image")(l.name());
          };
          return extend_hom(e, t);
        },
        py::arg("element"), py::arg("target"),
        "evaluate the unique homomorphism into a caller-supplied algebra; the target carries\n"
        "values `zero` and `unit` and callables add(a, b), scale(fraction, v), mul(a, b),\n"
        "nij(v) and letter_image(name)");

  m.def("enumerate_basis",
        [](const std::vector<std::string>& alphabet, unsigned max_degree) {
          return enumerate_basis(make_alphabet(alphabet), max_degree);
        },
        py::arg("alphabet"), py::arg("max_degree"));
  m.def("dimension_series",
        [](const std::vector<std::string>& alphabet, unsigned max_degree) {
          return dimension_series(make_alphabet(alphabet), max_degree);
        },
        py::arg("alphabet"), py::arg("max_degree"));

  m.def("known_laws", [] {
    py::list out;
    for (const LawInfo& info : law_catalog()) {
      py::dict d;
      d["id"] = info.id;
      d["arity"] = info.arity;
      d["default_degree"] = info.default_degree;
      d["existential"] = info.existential;
      d["summary"] = info.summary;
      out.append(d);
    }
    return out;
  });

  m.def("run_law_suite",
        [](const std::string& law, const std::vector<std::string>& alphabet,
           std::optional<unsigned> max_degree, std::optional<std::uint64_t> samples,
           std::uint64_t seed) {
          unsigned bound = 0;
          if (max_degree) {
            bound = *max_degree;
          } else {
            bool found = false;
            for (const LawInfo& info : law_catalog())
              if (info.id == law) {
                bound = info.default_degree;
                found = true;
              }
            if (!found) throw UnknownLawError(law);
          }
          VerifyMode mode =
              samples ? VerifyMode::random(*samples, seed) : VerifyMode::exhaustive();
          return run_suite(law, make_alphabet(alphabet), bound, mode);
        },
        py::arg("law"), py::arg("alphabet") = std::vector<std::string>{"x"},
        py::arg("max_degree") = py::none(), py::arg("samples") = py::none(),
        py::arg("seed") = 0);

  m.def("check_connected",
        [](const std::vector<std::string>& alphabet, unsigned max_degree) {
          return check_connected(make_alphabet(alphabet), max_degree);
        },
        py::arg("alphabet"), py::arg("max_degree"));

  m.attr("__version__") = "1.0.0";
}
