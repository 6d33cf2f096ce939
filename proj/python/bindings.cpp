#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "coxaut/automorphisms.hpp"
#include "coxaut/cayley_ball.hpp"
#include "coxaut/cycles.hpp"
#include "coxaut/report.hpp"
#include "coxaut/suite.hpp"

namespace py = pybind11;
using coxaut::report::json;

namespace {

py::object to_python(json const& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (auto const& x : j) out.append(to_python(x));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto const& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

class PySystem {
 public:
  PySystem(coxaut::CoxeterSystem sys, coxaut::Limits limits)
      : engine_(std::make_shared<coxaut::WordEngine const>(std::move(sys), limits)) {}

  coxaut::WordEngine const& engine() const { return *engine_; }

  coxaut::CayleyBall ball(int radius) const {
    py::gil_scoped_release release;
    return coxaut::CayleyBall::build(engine_, radius);
  }

  std::shared_ptr<coxaut::WordEngine const> engine_;
};

coxaut::Limits make_limits(std::size_t states, std::size_t vertices, std::size_t nodes) {
  coxaut::Limits l;
  l.max_closure_states = states;
  l.max_ball_vertices = vertices;
  l.max_search_nodes = nodes;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coxeter groups, Cayley graph balls and their automorphisms";

  auto base = py::register_exception<coxaut::Error>(m, "CoxautError");
  py::register_exception<coxaut::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<coxaut::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<coxaut::GuardExceeded>(m, "GuardExceeded", base.ptr());

  coxaut::Limits const d;
  py::class_<PySystem>(m, "System")
      .def(py::init([](std::string const& text, std::size_t s, std::size_t v, std::size_t n) {
             return PySystem(coxaut::parse_system(text), make_limits(s, v, n));
           }),
           py::arg("text"), py::kw_only(), py::arg("max_states") = d.max_closure_states,
           py::arg("max_vertices") = d.max_ball_vertices, py::arg("max_nodes") = d.max_search_nodes)
      .def_static(
          "load",
          [](std::string const& path, std::size_t s, std::size_t v, std::size_t n) {
            return PySystem(coxaut::load_system(path), make_limits(s, v, n));
          },
          py::arg("path"), py::kw_only(), py::arg("max_states") = d.max_closure_states,
          py::arg("max_vertices") = d.max_ball_vertices, py::arg("max_nodes") = d.max_search_nodes)
      .def_property_readonly("generators",
                             [](PySystem const& p) { return p.engine().system().names(); })
      .def("to_dict", [](PySystem const& p) { return to_python(coxaut::report::system_json(p.engine().system())); })
      .def("order",
           [](PySystem const& p, std::string const& a, std::string const& b) -> py::object {
             auto const& sys = p.engine().system();
             auto s = sys.find(a), t = sys.find(b);
             if (!s || !t) throw coxaut::ParseError("unknown generator");
             auto o = sys.order(*s, *t);
             if (o == coxaut::kInfinity) return py::float_(std::numeric_limits<double>::infinity());
             return py::int_(o);
           })
      .def("reduce",
           [](PySystem const& p, std::string const& w) {
             auto const& e = p.engine();
             return e.format(e.reduce(e.parse_word(w)));
           })
      .def("word", [](PySystem const& p, std::string const& w) {
             return to_python(coxaut::report::word_json(p.engine(), p.engine().parse_word(w)));
           })
      .def("equal", [](PySystem const& p, std::string const& a, std::string const& b) {
             auto const& e = p.engine();
             return e.words_equal(e.parse_word(a), e.parse_word(b));
           })
      .def("flexibility", [](PySystem const& p) {
             return to_python(coxaut::report::flexibility_json(p.engine().system()));
           })
      .def("ball", [](PySystem const& p, int radius) {
             return to_python(coxaut::report::ball_json(p.ball(radius)));
           }, py::arg("radius"))
      .def("cycles", [](PySystem const& p, int radius, int max_len) {
             return to_python(coxaut::report::cycles_json(p.ball(radius), max_len));
           }, py::arg("radius"), py::arg("max_len") = 0)
      .def("exotic", [](PySystem const& p, int radius, int n) {
             auto w = coxaut::is_flexible(p.engine().system());
             if (!w) throw coxaut::InvalidArgument("the diagram is not flexible");
             return to_python(coxaut::report::exotic_json(p.ball(radius), *w, n));
           }, py::arg("radius"), py::arg("n") = 0)
      .def("stabilizer", [](PySystem const& p, int radius, int probe, std::size_t max_entries) {
             auto ball = p.ball(radius);
             int pr = probe >= 0 ? probe : coxaut::default_probe_radius(ball.system(), radius);
             coxaut::StabilizerCensus census;
             {
               py::gil_scoped_release release;
               census = coxaut::identity_stabilizer_census(ball, pr, max_entries);
             }
             return to_python(coxaut::report::census_json(ball, census));
           }, py::arg("radius"), py::arg("probe") = -1, py::arg("max_entries") = 0)
      .def("verify", [](PySystem const& p, int radius, int probe, int n_max) {
             coxaut::SuiteOptions opts;
             opts.radius = radius;
             opts.probe = probe;
             opts.n_max = n_max;
             coxaut::SuiteReport rep;
             {
               py::gil_scoped_release release;
               rep = coxaut::run_invariant_suite(p.engine_, opts);
             }
             return to_python(coxaut::report::suite_json(rep));
           }, py::arg("radius") = 5, py::arg("probe") = -1, py::arg("n_max") = 3);
}
