#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valchain/chains.hpp"
#include "valchain/io.hpp"
#include "valchain/keypoly.hpp"
#include "valchain/scenarios.hpp"

namespace py = pybind11;
using namespace valchain;

namespace {

// Values cross the boundary as exact strings ("3/2", "(1, 7/2)", "inf").
std::string eval_chain_str(const MLVChain& c, const std::string& f, std::size_t depth) {
  return c.prefix(depth)(Poly::parse(f)).str();
}

MLVChain chain_from_text(const std::string& text) { return chain_from_json(Json::parse(text)); }
ABKPSequence sequence_from_text(const std::string& text) { return sequence_from_json(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_valchain, m) {
  m.doc() = "MacLane-Vaquie chains and ABKP sequences over (Q, v_p)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UnresolvedStability>(m, "UnresolvedStability", PyExc_RuntimeError);

  py::class_<MLVChain>(m, "Chain")
      .def_static("from_json", &chain_from_text)
      .def_static("from_file", [](const std::string& path) { return read_chain_file(path); })
      .def("to_json", [](const MLVChain& c) { return to_json(c).dump(2); })
      .def_property_readonly("is_infinite", &MLVChain::is_infinite)
      .def_property_readonly("prime", [](const MLVChain& c) { return c.field().prime(); })
      .def("eval", &eval_chain_str, py::arg("f"), py::arg("depth") = 8)
      .def(
          "truncate",
          [](const MLVChain& c, const std::string& q, const std::string& f, std::size_t depth) {
            return truncate(c.prefix(depth), Poly::parse(q), Poly::parse(f)).str();
          },
          py::arg("q"), py::arg("f"), py::arg("depth") = 8)
      .def(
          "epsilon",
          [](const MLVChain& c, const std::string& f, std::size_t depth) {
            return epsilon(c.prefix(depth), Poly::parse(f)).str();
          },
          py::arg("f"), py::arg("depth") = 8)
      .def(
          "validate",
          [](const MLVChain& c, std::size_t depth, std::uint64_t seed) {
            return to_json(validate_chain(c, depth, {}, {40, 6, seed})).dump();
          },
          py::arg("depth") = 8, py::arg("seed") = 1)
      .def("to_sequence", [](const MLVChain& c) { return mlv_to_abkp_unchecked(c); })
      .def("__eq__", [](const MLVChain& a, const MLVChain& b) { return a == b; });

  py::class_<ABKPSequence>(m, "Sequence")
      .def_static("from_json", &sequence_from_text)
      .def_static("from_file", [](const std::string& path) { return read_sequence_file(path); })
      .def("to_json", [](const ABKPSequence& s) { return to_json(s).dump(2); })
      .def_property_readonly("shape", [](const ABKPSequence& s) { return to_string(s.shape()); })
      .def(
          "eval",
          [](const ABKPSequence& s, const std::string& f, std::size_t depth) {
            return eval_sequence(s, Poly::parse(f), depth).str();
          },
          py::arg("f"), py::arg("depth") = 8)
      .def(
          "validate",
          [](const ABKPSequence& s, std::size_t depth, std::uint64_t seed) {
            return to_json(validate_sequence(s, depth, {40, 6, seed})).dump();
          },
          py::arg("depth") = 8, py::arg("seed") = 1)
      .def(
          "classify", [](const ABKPSequence& s, std::size_t depth) { return classify(s, depth).str(); },
          py::arg("depth") = 8)
      .def("to_chain", [](const ABKPSequence& s) { return abkp_to_mlv_unchecked(s); })
      .def("__eq__", [](const ABKPSequence& a, const ABKPSequence& b) { return a == b; });

  m.def("scenario", [](const std::string& name) {
    if (name == "two-step") return scenarios::two_step();
    if (name == "sqrt7") return scenarios::sqrt7();
    if (name == "liouville") return scenarios::liouville();
    if (name == "tower") return scenarios::tower();
    throw py::value_error("unknown scenario '" + name + "'");
  });
  m.def(
      "run_demo",
      [](const std::string& name, std::size_t depth, std::size_t window, std::uint64_t seed) {
        return scenarios::run_demo(name, {depth, window, seed}).structured.dump();
      },
      py::arg("name"), py::arg("depth") = 8, py::arg("window") = 8, py::arg("seed") = 1);
  m.def(
      "hensel_digits",
      [](long p, const std::string& target, const std::string& root, std::size_t n) {
        return hensel_digits(BaseField(p), Poly::parse(target), parse_rational(root), n);
      },
      py::arg("p"), py::arg("target"), py::arg("root"), py::arg("n"));
}
