#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fqreduce/carlitz.hpp"
#include "fqreduce/cli.hpp"
#include "fqreduce/reductions.hpp"
#include "fqreduce/textio.hpp"

namespace py = pybind11;
using namespace fqr;

namespace {

using Coeffs = std::vector<std::uint64_t>;

Poly make_poly(std::uint64_t q, const Coeffs& c) {
  const PrimeField F(q);
  for (auto v : c) {
    if (v >= q) throw Error(ErrorKind::BadInput, "coefficient not reduced mod q");
  }
  return Poly(F, c);
}

Coeffs coeffs_of(const Poly& f) { return f.coeffs(); }

OracleKind kind_of(const std::string& s) {
  if (s == "reference") return OracleKind::reference;
  if (s == "independent") return OracleKind::independent;
  throw Error(ErrorKind::BadInput, "oracle must be 'reference' or 'independent'");
}

std::vector<std::pair<Coeffs, int>> factor_py(std::uint64_t q, const Coeffs& c, const std::string& via,
                                              const std::string& oracle, std::uint64_t seed) {
  const Poly f = make_poly(q, c);
  Rng rng(seed);
  Factorization out(f.field());
  if (via == "reference") {
    out = factor(f, rng);
  } else {
    OracleSet oracles(kind_of(oracle), seed + 1);
    for (const auto& sq : squarefree_decompose(f)) {
      if (via == "frobminpoly") {
        out.append(reduce_factor_via_frobminpoly(sq.factor, [&](const Poly& a) { return oracles.frob_minpoly(a); }, rng),
                   sq.multiplicity);
      } else if (via == "factordegree") {
        out.append(reduce_factor_via_factordegree(
                       sq.factor, [&](const Poly& a) { return oracles.factor_degree(a); }, std::nullopt, rng),
                   sq.multiplicity);
      } else {
        throw Error(ErrorKind::BadInput, "via must be reference, frobminpoly or factordegree");
      }
    }
    out.canonicalize();
  }
  std::vector<std::pair<Coeffs, int>> result;
  for (const auto& fp : out.factors) result.emplace_back(coeffs_of(fp.factor), fp.multiplicity);
  return result;
}

py::tuple run_cli_py(const std::vector<std::string>& args, const std::string& input) {
  std::vector<std::string> argv{"fqreduce"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(argv, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_fqreduce, m) {
  m.doc() = "Polynomial factorization over prime fields and reductions between related problems";

  static py::handle exc = py::exception<Error>(m, "FqreduceError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("factor", &factor_py, py::arg("q"), py::arg("coeffs"), py::arg("via") = "reference",
        py::arg("oracle") = "independent", py::arg("seed") = 0,
        "Monic irreducible factors as (ascending coefficients, multiplicity) pairs.");
  m.def(
      "frob_minpoly",
      [](std::uint64_t q, const Coeffs& c, const std::string& oracle, std::uint64_t seed) {
        Rng rng(seed);
        return coeffs_of(fqr::frob_minpoly(make_poly(q, c), rng,
                                           kind_of(oracle) == OracleKind::reference ? FrobMode::reference
                                                                                    : FrobMode::independent));
      },
      py::arg("q"), py::arg("coeffs"), py::arg("oracle") = "independent", py::arg("seed") = 0);
  m.def(
      "carlitz_charpoly", [](std::uint64_t q, const Coeffs& c) { return coeffs_of(carlitz_charpoly_direct(make_poly(q, c))); },
      py::arg("q"), py::arg("coeffs"));
  m.def(
      "largest_factor_degree",
      [](std::uint64_t q, const Coeffs& c, const std::string& which) {
        if (which != "moore" && which != "vandermonde") throw Error(ErrorKind::BadInput, "which must be moore or vandermonde");
        return factor_degree_via_determinant(make_poly(q, c),
                                             which == "moore" ? DeterminantKind::moore : DeterminantKind::vandermonde)
            .degree;
      },
      py::arg("q"), py::arg("coeffs"), py::arg("which") = "moore");
  m.def(
      "smallest_factor_degree", [](std::uint64_t q, const Coeffs& c) { return factor_degree_ref(make_poly(q, c)); },
      py::arg("q"), py::arg("coeffs"));
  m.def(
      "random_squarefree",
      [](std::uint64_t q, int n, std::uint64_t seed) {
        Rng rng(seed);
        return coeffs_of(random_monic_squarefree(n, PrimeField(q), rng));
      },
      py::arg("q"), py::arg("n"), py::arg("seed") = 0);
  m.def(
      "format_poly", [](std::uint64_t q, const Coeffs& c) { return format_poly(make_poly(q, c)); }, py::arg("q"),
      py::arg("coeffs"));
  m.def(
      "parse_poly",
      [](const std::string& text) {
        const Poly f = parse_poly(text);
        return py::make_tuple(f.field().modulus(), coeffs_of(f));
      },
      py::arg("text"));
  m.def("run_cli", &run_cli_py, py::arg("args"), py::arg("stdin") = "",
        "Run the command-line tool in process; returns (exit code, stdout, stderr).");
}
