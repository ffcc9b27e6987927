// Python face of the library. Formulas, configurations and values cross the
// boundary as text in the concrete syntax; exact rationals stay exact.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wpcl/errors.hpp"
#include "wpcl/limits.hpp"
#include "wpcl/logic.hpp"
#include "wpcl/normal_form.hpp"
#include "wpcl/pvm.hpp"
#include "wpcl/semantics.hpp"
#include "wpcl/textio.hpp"

namespace py = pybind11;

namespace {

wpcl::PortSet make_ports(const std::vector<std::string>& names) {
  return wpcl::PortSet(names);
}

wpcl::Limits make_limits(int port_limit, int star_limit) {
  wpcl::Limits limits;
  if (port_limit > 0) limits.port_limit = port_limit;
  if (star_limit > 0) limits.star_limit = star_limit;
  return limits;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Weighted configuration logic: exact evaluation, normal forms and "
      "equivalence over product valuation monoids";

  py::register_exception<wpcl::ResourceError>(m, "ResourceLimit",
                                              PyExc_RuntimeError);
  py::register_exception<wpcl::HypothesisError>(m, "MissingHypothesis",
                                                PyExc_RuntimeError);
  py::register_exception<wpcl::DomainError>(m, "InputError", PyExc_ValueError);

  m.def("monoids", [] { return wpcl::builtin_monoid_names(); },
        "Names of the built-in product valuation monoids.");

  m.def(
      "evaluate",
      [](const std::string& formula, const std::string& config,
         const std::vector<std::string>& ports, const std::string& monoid,
         int port_limit, int star_limit) {
        wpcl::PvMonoid m_ = wpcl::builtin_monoid(monoid);
        wpcl::PortSet p = make_ports(ports);
        wpcl::Limits limits = make_limits(port_limit, star_limit);
        wpcl::WpclPtr f = wpcl::parse_wpcl(formula, p);
        wpcl::Value v = wpcl::wpcl_eval(
            wpcl::parse_configuration(config, p),
            wpcl::lower_full_valuations(f, p, m_, limits), m_, limits);
        return v.to_string();
      },
      py::arg("formula"), py::arg("config"), py::arg("ports"),
      py::arg("monoid") = "max-avg-plus", py::arg("port_limit") = 0,
      py::arg("star_limit") = 0,
      "Value of the formula on one configuration, as an exact string.");

  m.def(
      "normalize",
      [](const std::string& formula, const std::vector<std::string>& ports,
         const std::string& monoid, int port_limit, int star_limit) {
        wpcl::PvMonoid m_ = wpcl::builtin_monoid(monoid);
        wpcl::PortSet p = make_ports(ports);
        wpcl::Limits limits = make_limits(port_limit, star_limit);
        wpcl::Fnf fnf =
            wpcl::normalize(wpcl::parse_wpcl(formula, p), p, m_, limits);
        return wpcl::print_fnf(fnf, p);
      },
      py::arg("formula"), py::arg("ports"),
      py::arg("monoid") = "max-avg-plus", py::arg("port_limit") = 0,
      py::arg("star_limit") = 0,
      "Full normal form, one `value @ config` line per term.");

  m.def(
      "equivalent",
      [](const std::string& formula1, const std::string& formula2,
         const std::vector<std::string>& ports, const std::string& monoid,
         int port_limit, int star_limit) {
        wpcl::PvMonoid m_ = wpcl::builtin_monoid(monoid);
        wpcl::PortSet p = make_ports(ports);
        wpcl::Limits limits = make_limits(port_limit, star_limit);
        return wpcl::equivalent(wpcl::parse_wpcl(formula1, p),
                                wpcl::parse_wpcl(formula2, p), p, m_, limits);
      },
      py::arg("formula1"), py::arg("formula2"), py::arg("ports"),
      py::arg("monoid") = "max-avg-plus", py::arg("port_limit") = 0,
      py::arg("star_limit") = 0,
      "Whether the two formulas agree on every configuration.");

  m.def(
      "table",
      [](const std::string& formula, const std::vector<std::string>& ports,
         const std::string& monoid, int port_limit, int star_limit) {
        wpcl::PvMonoid m_ = wpcl::builtin_monoid(monoid);
        wpcl::PortSet p = make_ports(ports);
        wpcl::Limits limits = make_limits(port_limit, star_limit);
        wpcl::WpclPtr f = wpcl::parse_wpcl(formula, p);
        wpcl::SemanticTable t = wpcl::semantic_table(
            wpcl::lower_full_valuations(f, p, m_, limits), p, m_, limits);
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(t.size());
        for (const auto& [gamma, v] : t)
          out.emplace_back(wpcl::print_configuration(gamma, p), v.to_string());
        return out;
      },
      py::arg("formula"), py::arg("ports"),
      py::arg("monoid") = "max-avg-plus", py::arg("port_limit") = 0,
      py::arg("star_limit") = 0,
      "(configuration, value) pairs across every configuration.");

  m.def(
      "reprint",
      [](const std::string& formula, const std::vector<std::string>& ports) {
        wpcl::PortSet p = make_ports(ports);
        return wpcl::print_wpcl(wpcl::parse_wpcl(formula, p), p);
      },
      py::arg("formula"), py::arg("ports"),
      "Canonical rendering of a formula (minimal parentheses).");
}
