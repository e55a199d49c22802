#include "hypf/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <limits>
#include <queue>

namespace hypf {

namespace {

struct Panel {
  double a, b;
  CVec value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk_panel(const VecIntegrand& f, std::size_t dim, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  using G = boost::math::quadrature::gauss<double, 15>;
  const auto& xk = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  CVec fk(cplx(0.0), dim), fg(cplx(0.0), dim), v1(dim), v2(dim);
  double l1 = 0.0;
  f(c, v1);
  fk += cplx(wk[0]) * v1;
  fg += cplx(wg[0]) * v1;
  for (std::size_t j = 0; j < dim; ++j) l1 += wk[0] * std::abs(v1[j]);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    f(c + h * xk[i], v1);
    f(c - h * xk[i], v2);
    const CVec s = v1 + v2;
    fk += cplx(wk[i]) * s;
    if (i % 2 == 0) fg += cplx(wg[i / 2]) * s;
    for (std::size_t j = 0; j < dim; ++j) l1 += wk[i] * (std::abs(v1[j]) + std::abs(v2[j]));
  }
  Panel p{a, b, fk * cplx(h), 0.0, l1 * std::fabs(h)};
  double err = 0.0;
  for (std::size_t j = 0; j < dim; ++j) err = std::max(err, std::abs(fk[j] - fg[j]) * std::fabs(h));
  p.error = err;
  return p;
}

}  // namespace

VecEstimate integrate_gk(const VecIntegrand& f, std::size_t dim, double a, double b, double abs_tol,
                         int max_subdiv, int panels) {
  std::priority_queue<Panel> queue;
  panels = std::max(1, panels);
  const double step = (b - a) / panels;
  double total_err = 0.0, l1 = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double pa = a + i * step;
    const double pb = (i + 1 == panels) ? b : pa + step;
    Panel p = gk_panel(f, dim, pa, pb);
    total_err += p.error;
    l1 += p.l1;
    queue.push(std::move(p));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  int count = panels;
  bool converged = true;
  while (total_err > std::max(abs_tol, 64.0 * eps * l1)) {
    if (count >= max_subdiv) {
      converged = false;
      break;
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      queue.push(std::move(worst));
      converged = false;
      break;
    }
    Panel left = gk_panel(f, dim, worst.a, mid);
    Panel right = gk_panel(f, dim, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(std::move(left));
    queue.push(std::move(right));
    ++count;
  }
  VecEstimate out{CVec(cplx(0.0), dim), 0.0, converged};
  double err = 0.0;
  while (!queue.empty()) {
    out.value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  out.error = std::max(err, 8.0 * eps * l1);
  return out;
}

Estimate integrate_gk(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                      int max_subdiv, int panels) {
  const VecIntegrand g = [&f](double t, CVec& out) { out[0] = f(t); };
  const VecEstimate r = integrate_gk(g, 1, a, b, abs_tol, max_subdiv, panels);
  return {r.value[0], r.error};
}

Rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre needs n >= 1");
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
  Rule r;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  auto add = [&](double x) {
    const double d = boost::math::legendre_p_prime<double>(n, x);
    r.nodes.push_back(c + h * x);
    r.weights.push_back(h * 2.0 / ((1.0 - x * x) * d * d));
  };
  for (double x : zeros) {
    if (x == 0.0) {
      add(0.0);
    } else {
      add(x);
      add(-x);
    }
  }
  return r;
}

}  // namespace hypf
