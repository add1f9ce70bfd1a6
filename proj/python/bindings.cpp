#include "fobnn/classic.hpp"
#include "fobnn/errors.hpp"
#include "fobnn/graph.hpp"
#include "fobnn/pipeline.hpp"
#include "fobnn/session.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fobnn;

namespace {

std::vector<std::pair<std::string, std::string>> format_transitions(const std::vector<Transition>& ts,
                                                                    const std::vector<std::string>& species) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& t : ts) out.emplace_back(format_state(t.from, species), format_state(t.to, species));
  return out;
}

class Model {
 public:
  Model(ReactionNetwork rn, const std::string& mass_action, const std::string& constraints, bool derivative_zero,
        std::optional<std::string> backend)
      : rn_(std::move(rn)), backend_(backend.value_or(default_backend_name())) {
    ModelOptions o;
    o.mass_action = mass_action;
    o.constraints = constraints;
    o.derivative_zero = derivative_zero;
    fobnn_ = prepare_fobnn(rn_, o);
  }

  const std::vector<std::string>& species() const { return rn_.species; }
  std::string formula() const { return fobnn_.to_string(); }

  std::string dimacs() const {
    const Encoding enc = encode_fobnn(fobnn_);
    return emit_dimacs(enc.cnf, enc.registry);
  }

  auto transitions(std::optional<std::size_t> limit, std::optional<std::string> start, bool extended) const {
    SolverSession s = session();
    std::optional<State> from;
    if (start) from = parse_state(*start, rn_.species);
    return format_transitions(s.enumerate_transitions(limit, from, extended), rn_.species);
  }

  std::string stg(bool extended, bool force) const {
    SolverSession s = session();
    return to_json(s.build_stg(extended, force));
  }

  std::vector<std::string> fixed_points(std::size_t loop_limit) const {
    SolverSession s = session();
    std::vector<std::string> out;
    for (const auto& st : s.find_fixed_points(loop_limit).states) out.push_back(format_state(st, rn_.species));
    return out;
  }

  std::string classic(bool force) const { return to_json(classic_stg(rn_, force)); }

  std::string render() const { return render_native(rn_); }

 private:
  SolverSession session() const { return SolverSession(encode_fobnn(fobnn_), backend_); }

  ReactionNetwork rn_;
  std::string backend_;
  Fobnn fobnn_;
};

Model load_model(const std::string& path, const std::string& mass_action, const std::string& constraints,
                 bool derivative_zero, std::optional<std::string> backend) {
  return Model(load_network(path, guess_format(path)), mass_action, constraints, derivative_zero, std::move(backend));
}

Model from_text(const std::string& text, const std::string& mass_action, const std::string& constraints,
                bool derivative_zero, std::optional<std::string> backend) {
  return Model(parse_native(text), mass_action, constraints, derivative_zero, std::move(backend));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sign-abstracted transition analysis of reaction networks";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Model>(m, "Model")
      .def_property_readonly("species", &Model::species)
      .def("formula", &Model::formula)
      .def("render", &Model::render)
      .def("dimacs", &Model::dimacs)
      .def("transitions", &Model::transitions, py::arg("limit") = py::none(), py::arg("start") = py::none(),
           py::arg("extended") = false)
      .def("stg_json", &Model::stg, py::arg("extended") = false, py::arg("force") = false)
      .def("fixed_points", &Model::fixed_points, py::arg("loop_limit") = kDefaultLoopLimit)
      .def("classic_stg_json", &Model::classic, py::arg("force") = false);

  m.def("load", &load_model, py::arg("path"), py::arg("mass_action") = "off", py::arg("constraints") = "",
        py::arg("derivative_zero") = false, py::arg("backend") = py::none());
  m.def("parse", &from_text, py::arg("text"), py::arg("mass_action") = "off", py::arg("constraints") = "",
        py::arg("derivative_zero") = false, py::arg("backend") = py::none());
  m.def("available_backends", &available_backends);
  m.def("density", [](const std::string& graph_json) {
    const Rational d = density(graph_from_json(graph_json));
    return py::make_tuple(static_cast<long long>(boost::multiprecision::numerator(d)),
                          static_cast<long long>(boost::multiprecision::denominator(d)));
  });
}
