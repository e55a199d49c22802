#include "hypf/genfun.hpp"

#include <cmath>

#include "hypf/modular.hpp"
#include "hypf/quadrature.hpp"

namespace hypf {

cplx genfun_weight(int delta, double x, cplx zeta) {
  if (delta == 0) return zeta + x;
  if (delta == 1) return x * zeta - 1.0;
  throw DomainError("delta must be 0 or 1");
}

cplx gamma_point(double t) { return cplx(t, 1.0) / cplx(t, -1.0); }

cplx gamma_deriv(double t) {
  const cplx d = cplx(t, -1.0);
  return cplx(0.0, -2.0) / (d * d);
}

namespace {

const cplx two_pi_i{0.0, 2.0 * pi};

void check_delta(int delta) {
  if (delta != 0 && delta != 1) throw DomainError("delta must be 0 or 1");
}

std::vector<Estimate> unpack(const CVec& v, double err) {
  std::vector<Estimate> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i], err};
  return out;
}

}  // namespace

std::vector<Estimate> phi_inf_batch(int delta, const std::vector<double>& xs, cplx z,
                                    const QuadConfig& cfg, double clearance) {
  check_delta(delta);
  if (!(z.imag() > 0.0)) throw DomainError("phi_inf needs Im z > 0");
  const LambdaValues lz = lambda_values(z);
  if (std::fabs(lz.lam.real() - 0.5) <= clearance * std::max(1.0, std::abs(lz.lam)))
    throw NumericalError("lambda(z) lies on the image of the contour");
  const std::size_t dim = xs.size();
  const VecIntegrand f = [&](double s, CVec& out) {
    const double t = std::exp(s);
    const cplx zeta = gamma_point(t);
    const cplx dz = gamma_deriv(t) * t;
    const cplx base = lz.dlam * dz / ((lz.lam - lambda(zeta)) * two_pi_i);
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx w = genfun_weight(delta, xs[i], zeta);
      out[i] = base / (w * w);
    }
  };
  const double smax = std::log(cfg.t_max);
  const VecEstimate a = integrate_gk(f, dim, -smax, 0.0, 0.5 * cfg.abs_tol, cfg.max_subdiv, 4);
  const VecEstimate b = integrate_gk(f, dim, 0.0, smax, 0.5 * cfg.abs_tol, cfg.max_subdiv, 4);
  if (!a.converged || !b.converged) throw NumericalError("phi_inf quadrature did not converge");
  return unpack(a.value + b.value, a.error + b.error);
}

Estimate phi_inf(int delta, double x, cplx z, const QuadConfig& cfg, double clearance) {
  return phi_inf_batch(delta, {x}, z, cfg, clearance)[0];
}

std::vector<Estimate> phi_pi_raw(int delta, const std::vector<double>& xs, cplx w,
                                 const QuadConfig& cfg) {
  check_delta(delta);
  const LambdaValues lw = lambda_values(w);
  const std::size_t dim = xs.size();
  auto fill = [&](cplx zeta, cplx dz, CVec& out) {
    const cplx base = lw.dlam * dz / ((lw.lam - lambda(zeta)) * two_pi_i);
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx v = genfun_weight(delta, xs[i], zeta);
      out[i] = base / (v * v);
    }
  };
  const VecIntegrand left = [&](double t, CVec& out) { fill(cplx(-1.0, t), I, out); };
  const VecIntegrand top = [&](double s, CVec& out) { fill(cplx(s, 2.0), 1.0, out); };
  const VecIntegrand right = [&](double t, CVec& out) { fill(cplx(1.0, t), -I, out); };
  const double tol = cfg.abs_tol / 3.0;
  const double cut = pi_contour_cut;
  const VecEstimate a = integrate_gk(left, dim, cut, 2.0, tol, cfg.max_subdiv, 4);
  const VecEstimate b = integrate_gk(top, dim, -1.0, 1.0, tol, cfg.max_subdiv, 2);
  const VecEstimate c = integrate_gk(right, dim, cut, 2.0, tol, cfg.max_subdiv, 4);
  if (!a.converged || !b.converged || !c.converged)
    throw NumericalError("phi_pi quadrature did not converge");
  return unpack(a.value + b.value + c.value, a.error + b.error + c.error);
}

Estimate phi_pi(int delta, double x, cplx z, const QuadConfig& cfg) {
  const PartitionCell cell = classify_point(z);
  if (cell.kind != CellKind::E_WORD || !cell.word.empty() || cell.shift != 0)
    throw DomainError("phi_pi needs a point of the cell E0");
  return phi_pi_raw(delta, {x}, z, cfg)[0];
}

std::vector<Estimate> phi_strip_batch(int delta, const std::vector<double>& xs, cplx z,
                                      const QuadConfig& cfg, const ClassifyConfig& ccfg) {
  check_delta(delta);
  if (!(z.imag() > 0.0)) throw DomainError("phi_strip needs Im z > 0");
  if (std::fabs(z.real()) > 1.0 + 1e-12) throw DomainError("phi_strip needs |Re z| <= 1");
  const PartitionCell cell = classify_point(z, ccfg);
  const cplx z0 = cell.orbit.front();
  std::vector<Estimate> out(xs.size());

  if (cell.kind == CellKind::E_INF) {
    const auto r = phi_pi_raw(1 - delta, xs, -1.0 / z0, cfg);
    const cplx f = -1.0 / (z0 * z0);
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = {f * r[i].value, std::abs(f) * r[i].error};
    return out;
  }

  const CFWord& word = cell.word;
  const int n = word.length();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const cplx w = genfun_weight(delta, xs[i], z0);
    out[i].value = -1.0 / (w * w);
  }
  cplx psi_prime = 1.0;
  CFWord prefix;
  for (int k = 0; k < n; ++k) {
    prefix.entries.push_back(word.entries[k]);
    const Mobius m = word_mobius(prefix);
    const cplx den = -m.c.get_d() * z0 + m.a.get_d();
    psi_prime = 1.0 / (den * den);
    const int dk = (k % 2 == 0) ? delta : 1 - delta;
    const cplx g = cell.orbit[k + 1];
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const cplx w = genfun_weight(1 - dk, xs[i], g);
      out[i].value += sign * psi_prime / (w * w);
    }
  }
  const int dn = (n % 2 == 0) ? delta : 1 - delta;
  const auto r = phi_pi_raw(dn, xs, cell.orbit[n], cfg);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i].value += sign * psi_prime * r[i].value;
    out[i].error = std::abs(psi_prime) * r[i].error;
  }
  return out;
}

Estimate phi_strip(int delta, double x, cplx z, const QuadConfig& cfg, const ClassifyConfig& ccfg) {
  return phi_strip_batch(delta, {x}, z, cfg, ccfg)[0];
}

}  // namespace hypf
