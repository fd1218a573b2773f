#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "powerdiam/cli.hpp"
#include "powerdiam/diameter.hpp"
#include "powerdiam/power.hpp"
#include "powerdiam/version.hpp"

namespace py = pybind11;
using namespace powerdiam;

PYBIND11_MODULE(_core, m) {
  m.doc() = "diameters of finite groups and their direct powers";
  m.attr("__version__") = version_string;

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int rc = run_cli(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "run the command-line driver; returns (exit_code, stdout, stderr)");

  m.def(
      "diam", [](const std::string& spec) { return diam(resolve_spec(spec)); }, py::arg("spec"),
      "diameter of the group over its default generating set");

  m.def(
      "genset", [](const std::string& spec) { return resolve_spec(spec).display(); },
      py::arg("spec"), "display form of the default generating set");

  m.def(
      "power_diam",
      [](const std::string& spec, int n, const std::string& kind) {
        auto base = resolve_spec(spec);
        auto gs = kind == "coprime" ? coprime_genset(base, n) : canonical_genset(base, n);
        return diam(gs);
      },
      py::arg("spec"), py::arg("n"), py::arg("kind") = "canonical",
      "diameter of the n-fold direct power over a replicated generating set");

  m.def(
      "express",
      [](const std::string& spec, const std::string& element) {
        auto gs = resolve_spec(spec);
        const auto& pg = dynamic_cast<const PermGroup&>(gs.group());
        const auto idx = pg.index_of(parse_cycles(element, pg.degree()));
        if (!idx) throw std::invalid_argument("element is not in the group");
        auto lt = length_table(gs);
        return word_to_string(gs, express(lt, *idx));
      },
      py::arg("spec"), py::arg("element"),
      "shortest word for an element given in cycle notation");
}
