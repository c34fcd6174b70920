#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etp/cli.hpp"
#include "etp/families.hpp"
#include "etp/identities.hpp"

namespace py = pybind11;

namespace {

using Terms = std::vector<std::tuple<unsigned, unsigned, std::string>>;

Terms terms_of(const etp::MultiPoly& p) {
  Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e.ex, e.ey, c.str());
  return out;
}

etp::FamilyTable& table() {
  static etp::FamilyTable fam;
  return fam;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact truncated Euler and related polynomial families";

  m.def("truncated_euler", [](unsigned mm, unsigned n) { return terms_of(table().truncated_euler(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("truncated_euler_number", [](unsigned mm, unsigned n) { return table().truncated_euler_number(mm, n).str(); },
        py::arg("m"), py::arg("n"));
  m.def("hypergeom_bernoulli", [](unsigned mm, unsigned n) { return terms_of(table().hypergeom_bernoulli(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("bernoulli", [](unsigned n) { return terms_of(table().bernoulli(n)); }, py::arg("n"));
  m.def("euler", [](unsigned n) { return terms_of(table().euler(n)); }, py::arg("n"));
  m.def(
      "frobenius_euler",
      [](unsigned n, unsigned r, const std::string& lambda) {
        const etp::Rational l = etp::Rational::parse(lambda);
        if (l == etp::Rational(1)) throw py::value_error("lambda must not be 1");
        return terms_of(table().frobenius_euler(n, r, l));
      },
      py::arg("n"), py::arg("r"), py::arg("lam"));

  m.def(
      "verify",
      [](unsigned m_max, unsigned n_max) {
        etp::GridConfig c = etp::GridConfig::defaults();
        c.m_max = m_max;
        c.n_max = n_max;
        const auto r = etp::verify_grid(table(), c);
        return std::make_tuple(r.passed, r.failed,
                               r.t7_variant ? std::string(etp::t7_variant_name(*r.t7_variant)) : std::string());
      },
      py::arg("m_max") = 3, py::arg("n_max") = 10);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        etp::FamilyTable fam;
        const auto r = etp::cli::run(fam, args);
        return std::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"));
}
