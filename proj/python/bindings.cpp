#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "supercong/congruences.hpp"
#include "supercong/exact.hpp"
#include "supercong/report.hpp"
#include "supercong/sweep.hpp"

namespace py = pybind11;
using namespace supercong;

namespace {

py::object valuation_to_py(const Valuation& v) {
  switch (v.kind) {
    case Valuation::Kind::Finite: return py::int_(v.value);
    case Valuation::Kind::AtLeast:
    case Valuation::Kind::Infinite: break;
  }
  return py::str(v.to_string());
}

py::dict record_to_dict(const CongruenceRecord& rec) {
  py::dict d;
  d["statement"] = std::string(statement_name(rec.statement));
  d["p"] = rec.params.p;
  d["m"] = rec.params.m;
  d["q"] = rec.params.q;
  d["n"] = rec.params.n;
  d["k"] = rec.params.k;
  d["modulus_exp"] = rec.modulus_exp;
  // Residues of p^5 can exceed 64 bits; Python ints are unbounded.
  d["residue"] = py::int_(py::str(rec.residue));
  d["valuation"] = valuation_to_py(rec.observed);
  d["required"] = valuation_to_py(rec.required);
  d["pass"] = rec.asserted ? py::object(py::bool_(rec.pass)) : py::object(py::none());
  d["micros"] = rec.micros;
  return d;
}


}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fast truncated p-adic verification of binomial supercongruences";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("sieve", &sieve, py::arg("limit"), "Primes <= limit.");
  m.def("is_prime", [](long n) { return is_prime(BigInt(n)); }, py::arg("n"));

  m.def(
      "theorem12_residue",
      [](long mm, long q, long p, unsigned e) { return record_to_dict(theorem12_residue(mm, q, p, e)); },
      py::arg("m"), py::arg("q"), py::arg("p"), py::arg("e") = 3,
      "Record for sum_{k<p} (-1)^{km} C(p/m - q, k)^m in Z/p^e.");
  m.def("theorem11_lhs1", [](long p) { return record_to_dict(theorem11_lhs1(p)); }, py::arg("p"));
  m.def("theorem11_second", [](long p) { return record_to_dict(theorem11_second(p)); }, py::arg("p"));
  m.def(
      "wolstenholme_check",
      [](long p) {
        auto [h, b] = wolstenholme_check(p);
        return py::make_tuple(record_to_dict(h), record_to_dict(b));
      },
      py::arg("p"));
  m.def("lemma21_check", [](long n) { return record_to_dict(lemma21_check(n)); }, py::arg("n"));
  m.def("lemma22_check", [](long p, long q) { return record_to_dict(lemma22_check(p, q)); },
        py::arg("p"), py::arg("q"));
  m.def(
      "proof_step_check",
      [](long mm, long q, long p) { return record_to_dict(proof_step_check(mm, q, p)); },
      py::arg("m"), py::arg("q"), py::arg("p"));
  m.def(
      "central_identity_check",
      [](long mm, long q, long p) { return record_to_dict(central_identity_check(mm, q, p)); },
      py::arg("m"), py::arg("q"), py::arg("p"));

  m.def(
      "exact_theorem12_sum",
      [](long mm, long q, long p) {
        const BigRational x = exact_theorem12_sum(mm, q, p);
        return py::make_tuple(py::int_(py::str(x.num().get_str())), py::int_(py::str(x.den().get_str())));
      },
      py::arg("m"), py::arg("q"), py::arg("p"),
      "Exact rational main sum as a (numerator, denominator) pair.");

  m.def(
      "explore_valuation",
      [](long mm, long q, long p, unsigned e_max) {
        return valuation_to_py(explore_valuation(mm, q, p, e_max));
      },
      py::arg("m"), py::arg("q"), py::arg("p"), py::arg("e_max"));

  m.def(
      "run_grid",
      [](std::vector<std::string> statements, std::pair<long, long> m_range,
         std::pair<long, long> q_range, long p_min, long p_max, bool include_excluded, unsigned jobs) {
        Grid grid;
        for (const auto& name : statements) {
          const auto id = parse_statement(name);
          if (!id) throw Error(ErrorCode::ParameterOutOfRange, "unknown statement " + name);
          grid.statements.push_back(*id);
        }
        grid.m_range = {m_range.first, m_range.second};
        grid.q_range = {q_range.first, q_range.second};
        grid.p_min = p_min;
        grid.p_max = p_max;
        grid.include_excluded = include_excluded;
        SweepResult result;
        {
          py::gil_scoped_release nogil;
          result = run_grid(grid, jobs);
        }
        py::list out;
        for (const auto& rec : result.records) out.append(record_to_dict(rec));
        return out;
      },
      py::arg("statements"), py::arg("m_range") = std::pair<long, long>{3, 8},
      py::arg("q_range") = std::pair<long, long>{1, 4}, py::arg("p_min") = 2, py::arg("p_max") = 311,
      py::arg("include_excluded") = false, py::arg("jobs") = 1,
      "Records for every admissible grid point, sorted deterministically.");

  m.def(
      "report_lines",
      [](std::vector<std::string> statements, long p_max, unsigned jobs) {
        Grid grid;
        for (const auto& name : statements) {
          const auto id = parse_statement(name);
          if (!id) throw Error(ErrorCode::ParameterOutOfRange, "unknown statement " + name);
          grid.statements.push_back(*id);
        }
        grid.p_max = p_max;
        std::ostringstream os;
        {
          py::gil_scoped_release nogil;
          const SweepResult result = run_grid(grid, jobs);
          write_report(result.records, os, false);
        }
        return os.str();
      },
      py::arg("statements"), py::arg("p_max") = 311, py::arg("jobs") = 1,
      "JSON-Lines report text for a grid over the default m and q ranges.");
}
