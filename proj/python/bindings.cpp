#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypf/biortho.hpp"
#include "hypf/cfrac.hpp"
#include "hypf/faber.hpp"
#include "hypf/genfun.hpp"
#include "hypf/hfs.hpp"
#include "hypf/kleingordon.hpp"
#include "hypf/modular.hpp"
#include "hypf/transfer.hpp"

namespace py = pybind11;
using namespace hypf;

namespace {

CFWord to_word(const std::vector<long>& entries) { return CFWord{entries}; }

py::list coeff_list(const std::map<int, cplx>& m) {
  py::list out;
  for (const auto& [n, v] : m) out.append(py::make_tuple(n, v));
  return out;
}

TestFunction make_test_function(const std::string& kind, double a, double b) {
  if (kind == "indicator") return indicator(a, b);
  if (kind == "bump") return smooth_bump(a, b);
  if (kind == "gauss") return gaussian_bump(a, b);
  throw DomainError("test function kind must be indicator, bump or gauss");
}

}  // namespace

PYBIND11_MODULE(_hypf, m) {
  m.doc() = "Modular functions, hyperbolic Fourier series and Klein-Gordon interpolation";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<BoundaryAmbiguous>(m, "BoundaryAmbiguous", numerical.ptr());
  (void)domain;

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("error", &Estimate::error)
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(" + py::repr(py::cast(e.value)).cast<std::string>() + ", error=" +
               std::to_string(e.error) + ")";
      });

  // modular kernel
  m.def("r4", &r4, py::arg("n"));
  m.def("theta", [](int kind, cplx q) { return theta(kind, q); }, py::arg("kind"), py::arg("q"));
  m.def("big_theta", [](int kind, cplx z) { return big_theta(kind, z); }, py::arg("kind"), py::arg("z"));
  m.def("lambda_", [](cplx z) { return lambda(z); }, py::arg("z"));
  m.def("lambda_prime", [](cplx z) { return lambda_prime(z); }, py::arg("z"));
  m.def("schwarz_tau", &schwarz_tau, py::arg("z"));
  m.def("hyp_half", &hyp_half, py::arg("z"));

  // Schwarz polynomials as (numerator, denominator) strings, index k = 0..n
  m.def("schwarz_poly", [](int n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const mpq_class& c : SchwarzFamily::shared().poly(n).coeffs)
      out.emplace_back(c.get_num().get_str(), c.get_den().get_str());
    return out;
  }, py::arg("n"));
  m.def("eval_r_triangle", &eval_R_triangle, py::arg("n"), py::arg("z"));

  // continued fractions
  m.def("even_rational_decompose", [](long p, long q) {
    return even_rational_decompose(mpz_class(p), mpz_class(q)).entries;
  }, py::arg("p"), py::arg("q"));
  m.def("convergents", [](const std::vector<long>& word) {
    const ConvergentPair c = convergents(to_word(word));
    std::vector<std::pair<std::string, std::string>> out;
    for (int k = -1; k <= c.length(); ++k) out.emplace_back(c.p_at(k).get_str(), c.q_at(k).get_str());
    return out;
  }, py::arg("word"));
  m.def("roof_diameter", [](const std::vector<long>& word) {
    const mpq_class r = roof_diameter(to_word(word));
    return std::pair{r.get_num().get_str(), r.get_den().get_str()};
  }, py::arg("word"));
  m.def("classify_point", [](cplx z, bool lenient, double eps) {
    ClassifyConfig cfg;
    cfg.lenient = lenient;
    if (eps > 0) cfg.boundary_eps = eps;
    const PartitionCell c = classify_point(z, cfg);
    py::dict d;
    d["kind"] = kind_name(c.kind);
    d["word"] = c.word.entries;
    d["shift"] = c.shift;
    d["height"] = c.height;
    return d;
  }, py::arg("z"), py::arg("lenient") = false, py::arg("eps") = 0.0);

  // generating functions
  m.def("phi_inf", [](int delta, double x, cplx z) { return phi_inf(delta, x, z); },
        py::arg("delta"), py::arg("x"), py::arg("z"));
  m.def("phi_pi", [](int delta, double x, cplx z) { return phi_pi(delta, x, z); },
        py::arg("delta"), py::arg("x"), py::arg("z"));
  m.def("phi_strip", [](int delta, double x, cplx z) { return phi_strip(delta, x, z); },
        py::arg("delta"), py::arg("x"), py::arg("z"));

  // biorthogonal system
  m.def("h0", &h0, py::arg("x"));
  m.def("hn", &hn, py::arg("n"), py::arg("x"));
  m.def("mn", &mn, py::arg("n"), py::arg("x"));
  m.def("periodize", [](const std::string& family, int n, double x, double tol) {
    return periodize(parse_family(family), n, x, tol);
  }, py::arg("family"), py::arg("n"), py::arg("x"), py::arg("tol") = 1e-5);
  m.def("biortho_pairing", [](int mm, const std::string& family, int n, double tol) {
    return biortho_pairing(mm, parse_family(family), n, tol);
  }, py::arg("m"), py::arg("family"), py::arg("n"), py::arg("tol") = 1e-5);

  // hyperbolic Fourier series
  m.def("conj_coefficients", [](const std::string& kind, double a, double b, int N) {
    const HFSCoeffs c = conj_analyze(make_test_function(kind, a, b), N);
    py::dict d;
    d["h"] = coeff_list(c.h);
    d["m"] = coeff_list(c.m);
    d["error"] = c.error;
    return d;
  }, py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("N"));
  m.def("poisson_coefficients", [](cplx z, int N) {
    const HFSCoeffs c = poisson_coefficients(z, N);
    py::dict d;
    d["h"] = coeff_list(c.h);
    d["m"] = coeff_list(c.m);
    d["error"] = c.error;
    return d;
  }, py::arg("z"), py::arg("N"));

  // Klein-Gordon
  m.def("r_interp", &r_interp, py::arg("n"), py::arg("x"), py::arg("y"));
  m.def("u_phi", [](const std::string& kind, double a, double b, double x, double y) {
    return u_phi(make_test_function(kind, a, b), x, y);
  }, py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"));
  m.def("hankel_k0", &hankel_k0, py::arg("x"));
  m.def("hankel_k1", &hankel_k1, py::arg("x"));

  // transfer operator
  m.def("transfer_iterate", [](int N) {
    const GridFunction g = transfer_iterate(N);
    std::vector<double> v;
    for (const cplx& c : g.values) v.push_back(c.real());
    return std::pair{g.nodes, v};
  }, py::arg("N"));
  m.def("contraction_check", [](int N) { return contraction_check(N); }, py::arg("N"));
}
