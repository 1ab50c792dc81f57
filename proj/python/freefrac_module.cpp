#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freefrac/json_io.hpp"
#include "freefrac/session.hpp"

namespace py = pybind11;
using namespace freefrac;

namespace {

// An ALS together with the alphabet it is written over.
struct Element {
  Als als;
  Alphabet alphabet;
};

Element element_of(Session& s, const py::object& x) {
  if (py::isinstance<Element>(x)) return x.cast<Element>();
  return {s.build(x.cast<std::string>()), s.alphabet()};
}

}  // namespace

PYBIND11_MODULE(_freefrac, m) {
  m.doc() = "Exact arithmetic in the free field via admissible linear systems";

  static py::exception<UserError> user_error(m, "UserError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UserError& e) {
      user_error(e.what());
    } catch (const ContractViolation& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvariantFailure& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<Element>(m, "Element")
      .def_property_readonly("dim", [](const Element& e) { return e.als.dim(); })
      .def_property_readonly("letters", [](const Element& e) { return e.alphabet.letters(); })
      .def("is_zero", [](const Element& e) { return is_zero(e.als); })
      .def("expand",
           [](const Element& e, std::size_t deg) {
             return als_expand(e.als, deg).terms.str(e.alphabet);
           },
           py::arg("deg"))
      .def("to_json", [](const Element& e) { return export_als(e.als, e.alphabet); })
      .def("__str__", [](const Element& e) { return e.als.str(e.alphabet); })
      .def("__repr__", [](const Element& e) {
        return "<freefrac.Element dim=" + std::to_string(e.als.dim()) + ">";
      });

  m.def("from_json", [](const std::string& text) {
    AlsDocument doc = import_als(text);
    return Element{std::move(doc.als), std::move(doc.alphabet)};
  });
  m.def("minimize", [](const Element& e) {
    const Minimized r = minimize(e.als);
    return py::make_tuple(Element{r.als, e.alphabet}, r.certified);
  });

  py::class_<Session>(m, "Session")
      .def(py::init([](const std::string& letters, std::size_t trials, std::uint64_t seed) {
             return Session(Alphabet::parse(letters), Settings{trials, seed, false});
           }),
           py::arg("letters") = "x,y,z", py::arg("trials") = 10, py::arg("seed") = 1)
      .def_property_readonly("letters", [](const Session& s) { return s.alphabet().letters(); })
      .def("build",
           [](Session& s, const std::string& expr) { return Element{s.build(expr), s.alphabet()}; })
      .def("bind", [](Session& s, const std::string& name,
                      const py::object& value) { s.bind(name, element_of(s, value).als); })
      .def("rank", [](Session& s, const py::object& x) { return rank(element_of(s, x).als); })
      .def("equal",
           [](Session& s, const py::object& a, const py::object& b) {
             const EqualityVerdict v = equal(element_of(s, a).als, element_of(s, b).als,
                                             {s.settings().trials, 0, s.settings().seed});
             return verdict_str(v.result);
           })
      .def("factor",
           [](Session& s, const py::object& x) {
             const Element p = element_of(s, x);
             const Factorization f = factorize_atoms(p.als);
             std::vector<std::string> out;
             for (const Als& q : f.factors) out.push_back(poly_of(q).str(s.alphabet()));
             return py::make_tuple(out, f.certified);
           })
      .def("steps",
           [](const Session& s) {
             std::vector<std::pair<std::string, std::size_t>> out;
             for (const auto& st : s.steps()) out.emplace_back(st.expr, st.dim);
             return out;
           })
      .def("run", [](Session& s, const std::string& line) {
        std::ostringstream out, err;
        const int code = run_command(s, line, out, err).exit_code;
        return py::make_tuple(code, out.str(), err.str());
      });
}
