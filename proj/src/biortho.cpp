#include "hypf/biortho.hpp"

#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <limits>

#include "hypf/cfrac.hpp"
#include "hypf/contour.hpp"
#include "hypf/genfun.hpp"
#include "hypf/quadrature.hpp"
#include "hypf/transfer.hpp"

namespace hypf {

namespace {

template <class R, class C>
Estimate contour_sum(const ContourTable<R, C>& tab, const std::vector<C>& f, const C& scale) {
  C fine(R(0)), coarse(R(0));
  R l1 = 0;
  for (std::size_t idx = 0; idx < tab.size(); ++idx) {
    const C v = tab.weight[idx] * f[idx];
    fine += v;
    if (tab.coarse(idx)) coarse += v;
    using std::abs;
    l1 += abs(v);
  }
  coarse *= R(2);
  using std::abs;
  const R sa = abs(scale);
  const R err = (abs(fine - coarse) + 8 * std::numeric_limits<R>::epsilon() * l1) * sa;
  const C val = fine * scale;
  if constexpr (std::is_same_v<R, double>) {
    return {val, err};
  } else {
    return {to_double(val), static_cast<double>(err)};
  }
}

// d^k/dx^k of the kernel in x, evaluated at each node.
template <class R, class C>
std::vector<C> direct_integrand(const ContourTable<R, C>& tab, Family which, int n, double xd,
                                int deriv) {
  const R x(xd);
  const std::size_t size = tab.size();
  std::vector<C> f(size);
  const R fact = boost::math::factorial<double>(deriv);
  const R sign = (deriv % 2 == 0) ? R(1) : R(-1);
  for (std::size_t idx = 0; idx < size; ++idx) {
    const C z = tab.zeta[idx];
    if (which == Family::H0) {
      // ζ/(x² − ζ²) = (1/2)[1/(x − ζ) − 1/(x + ζ)]
      C a = R(1) / (x - z), b = R(1) / (x + z);
      C pa = a, pb = b;
      for (int k = 0; k < deriv; ++k) {
        pa *= a;
        pb *= b;
      }
      f[idx] = tab.theta3_4[idx] * (pa - pb) * (sign * fact / 2);
    } else {
      const C b = R(1) / (x + z);
      C pb = b * b;
      for (int k = 0; k < deriv; ++k) pb *= b;
      const C& rn = (which == Family::H) ? tab.r[n - 1][idx] : tab.r_inv[n - 1][idx];
      f[idx] = rn * pb * (sign * fact * R(deriv + 1));
    }
  }
  return f;
}

template <class R, class C>
Estimate direct_value(const ContourTable<R, C>& tab, Family which, int n, double x, int deriv) {
  const R pi_r = boost::math::constants::pi<R>();
  C scale;
  if (which == Family::H0) {
    scale = R(1) / C(R(0), 2 * pi_r);
  } else {
    const R s = R(1) / (4 * pi_r * pi_r * n);
    scale = C(which == Family::H ? -s : s, R(0));
  }
  return contour_sum(tab, direct_integrand(tab, which, n, x, deriv), scale);
}

std::vector<double> negated(const std::vector<double>& xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = -xs[i];
  return out;
}

}  // namespace

BiorthoEvaluator::BiorthoEvaluator(const BiorthoConfig& cfg) : cfg_(cfg) {
  if (cfg_.max_n < 1 || cfg_.max_n > contour_nmax)
    throw DomainError("max_n must lie in 1.." + std::to_string(contour_nmax));
  if (cfg_.direct_cap < 0) throw DomainError("direct_cap must be nonnegative");
  if (cfg_.low_nodes < 4 || cfg_.low_max_nodes < cfg_.low_nodes)
    throw DomainError("invalid LOW_CONTOUR node counts");
}

void BiorthoEvaluator::check_n(int n) const {
  if (std::abs(n) > cfg_.max_n)
    throw DomainError("|n| exceeds max_n = " + std::to_string(cfg_.max_n));
}

PathPolicy BiorthoEvaluator::resolve(int n) const {
  const int an = std::abs(n);
  switch (cfg_.path) {
    case PathPolicy::DIRECT:
      return PathPolicy::DIRECT;
    case PathPolicy::LOW_CONTOUR:
      return PathPolicy::LOW_CONTOUR;
    case PathPolicy::AUTO:
      break;
  }
  if (an <= cfg_.direct_cap || cfg_.precision == Precision::QUAD) return PathPolicy::DIRECT;
  return PathPolicy::LOW_CONTOUR;
}

std::vector<Estimate> BiorthoEvaluator::direct(Family which, int n, const std::vector<double>& xs,
                                               Precision p, int deriv) const {
  if (deriv < 0 || deriv > 8) throw DomainError("derivative order must lie in 0..8");
  if (which != Family::H0) {
    if (n < 1) throw DomainError("direct path needs n >= 1");
    check_n(n);
    if (p == Precision::DOUBLE && n > cfg_.direct_cap)
      throw NumericalError("n = " + std::to_string(n) + " exceeds the double precision DIRECT cap " +
                           std::to_string(cfg_.direct_cap));
  }
  std::vector<Estimate> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    if (!std::isfinite(x)) throw DomainError("x must be finite");
    // M_n(x) = H_n(−1/x)/x² on |x| ≥ 1, where the direct M kernel is the wrong side.
    if (which == Family::M && deriv == 0 && std::fabs(x) >= 1.0) {
      const double y = -1.0 / x;
      const Estimate e = (p == Precision::QUAD)
                             ? direct_value(contour_table_quad(), Family::H, n, y, 0)
                             : direct_value(contour_table_double(), Family::H, n, y, 0);
      out[i] = {e.value / (x * x), e.error / (x * x)};
      continue;
    }
    out[i] = (p == Precision::QUAD) ? direct_value(contour_table_quad(), which, n, x, deriv)
                                    : direct_value(contour_table_double(), which, n, x, deriv);
  }
  return out;
}

std::vector<Estimate> BiorthoEvaluator::low_contour(Family which, int n,
                                                    const std::vector<double>& xs) const {
  if (which == Family::H0) throw DomainError("LOW_CONTOUR applies to H_n and M_n only");
  if (n < 1) throw DomainError("LOW_CONTOUR needs n >= 1");
  check_n(n);
  const int delta = (which == Family::H) ? 0 : 1;
  const double y = 1.0 / n;
  ClassifyConfig cc;
  cc.lenient = true;
  const std::size_t dim = xs.size();
  std::vector<cplx> sum(dim, 0.0);
  std::vector<double> qerr(dim, 0.0);
  // Adds nodes −1 + 2j/J for j = first, first+step, … < J.
  auto add_nodes = [&](int J, int first, int step) {
    for (int j = first; j < J; j += step) {
      const cplx z(-1.0 + 2.0 * j / J, y);
      const auto phi = phi_strip_batch(delta, xs, z, cfg_.quad, cc);
      const cplx e = std::exp(cplx(0.0, -pi * n) * z);
      for (std::size_t i = 0; i < dim; ++i) {
        sum[i] += e * phi[i].value;
        qerr[i] += std::abs(e) * phi[i].error;
      }
    }
  };
  int J = cfg_.low_nodes;
  add_nodes(J, 0, 1);
  const double scale = 1.0 / (4.0 * pi * pi * n);
  std::vector<cplx> prev(dim);
  for (std::size_t i = 0; i < dim; ++i) prev[i] = sum[i] * (2.0 / J) * scale;
  while (true) {
    if (2 * J > cfg_.low_max_nodes)
      throw NumericalError("LOW_CONTOUR trapezoid did not converge within low_max_nodes");
    add_nodes(2 * J, 1, 2);
    J *= 2;
    double worst = 0.0;
    std::vector<Estimate> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx cur = sum[i] * (2.0 / J) * scale;
      const double diff = std::abs(cur - prev[i]);
      out[i] = {cur, diff + qerr[i] * (2.0 / J) * scale};
      worst = std::max(worst, diff);
      prev[i] = cur;
    }
    if (worst <= cfg_.low_tol) return out;
  }
}

std::vector<Estimate> BiorthoEvaluator::eval_positive(Family which, int n,
                                                      const std::vector<double>& xs) const {
  if (resolve(n) == PathPolicy::LOW_CONTOUR) return low_contour(which, n, xs);
  // An explicit DIRECT policy in double precision keeps the cap and fails above it.
  const bool dbl = cfg_.precision == Precision::DOUBLE &&
                   (n <= cfg_.direct_cap || cfg_.path == PathPolicy::DIRECT);
  return direct(which, n, xs, dbl ? Precision::DOUBLE : Precision::QUAD);
}

std::vector<Estimate> BiorthoEvaluator::eval(Family which, int n,
                                             const std::vector<double>& xs) const {
  if (which == Family::H0 || (which == Family::H && n == 0))
    return direct(Family::H0, 0, xs, Precision::DOUBLE);
  if (n == 0) throw DomainError("M_n needs n != 0");
  check_n(n);
  // H_{−n}(x) = H_n(−x) and M_{−n}(x) = M_n(−x).
  if (n < 0) return eval_positive(which, -n, negated(xs));
  return eval_positive(which, n, xs);
}

Estimate BiorthoEvaluator::h0(double x) const { return eval(Family::H0, 0, {x})[0]; }
Estimate BiorthoEvaluator::hn(int n, double x) const { return eval(Family::H, n, {x})[0]; }
Estimate BiorthoEvaluator::mn(int n, double x) const { return eval(Family::M, n, {x})[0]; }

const BiorthoEvaluator& default_evaluator() {
  static const BiorthoEvaluator ev{};
  return ev;
}

Estimate h0(double x) { return default_evaluator().h0(x); }
Estimate hn(int n, double x) { return default_evaluator().hn(n, x); }
Estimate mn(int n, double x) { return default_evaluator().mn(n, x); }

double h0_envelope(double x) { return std::min(1.5, 3.0 / (1.0 + x * x)); }

double hn_envelope(int n, double x) {
  const double c = std::pow(pi, 6) * n * n;
  return std::min(c / 4.0, c / (2.0 * (1.0 + x * x)));
}

std::vector<Estimate> periodize_batch(Family which, int n, const std::vector<double>& xs, double tol,
                                      const BiorthoEvaluator& ev) {
  if (!(tol > 0)) throw DomainError("tol must be positive");
  if (which == Family::H && n == 0) which = Family::H0;
  if (which == Family::M && n == 0) throw DomainError("M_n needs n != 0");
  const Family partner = which == Family::H0 ? Family::H0
                         : which == Family::H ? Family::M
                                              : Family::H;
  const std::size_t dim = xs.size();
  std::vector<double> xr(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::isfinite(xs[i])) throw DomainError("x must be finite");
    xr[i] = even_parts(xs[i]).frac;
  }
  const std::vector<Estimate> base = ev.eval(which, n, xr);

  // Taylor jet of the partner at 0 for the far tail; quad precision, exact kernel derivatives.
  std::vector<cplx> jet(4);
  double jet_err = 0.0;
  for (int d = 0; d < 4; ++d) {
    const int an = std::abs(n);
    const double sgn = (n < 0 && d % 2 == 1) ? -1.0 : 1.0;
    const Estimate e = ev.direct(partner, partner == Family::H0 ? 0 : an, {0.0}, Precision::QUAD, d)[0];
    jet[d] = sgn * e.value / boost::math::factorial<double>(d);
    jet_err += e.error;
  }

  std::vector<cplx> near(dim, 0.0);
  std::vector<double> near_err(dim, 0.0);
  int done = 0;
  for (int K = 64;; K *= 2) {
    std::vector<double> us;
    us.reserve(2 * (K - done) * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (int k = done + 1; k <= K; ++k) {
        us.push_back(1.0 / (2.0 * k - xr[i]));
        us.push_back(1.0 / (-2.0 * k - xr[i]));
      }
    const std::vector<Estimate> g = ev.eval(partner, n, us);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (int k = done + 1; k <= K; ++k)
        for (int s = 0; s < 2; ++s, ++idx) {
          const double u2 = us[idx] * us[idx];
          near[i] += g[idx].value * u2;
          near_err[i] += g[idx].error * u2;
        }
    done = K;

    std::vector<Estimate> out(dim);
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      cplx tail = 0.0;
      for (int d = 0; d < 3; ++d) tail += jet[d] * hurwitz_tail(2 + d, K, xr[i]);
      const double last = std::abs(jet[3] * hurwitz_tail(5, K, xr[i]));
      tail += jet[3] * hurwitz_tail(5, K, xr[i]);
      const double err = base[i].error + near_err[i] + 2 * last +
                         jet_err * std::fabs(hurwitz_tail(2, K, xr[i]));
      out[i] = {base[i].value + near[i] + tail, err};
      worst = std::max(worst, err);
    }
    if (worst <= tol) return out;
    if (K >= 4096) throw NumericalError("periodize: tol unreachable within the K cap");
  }
}

Estimate periodize(Family which, int n, double x, double tol, const BiorthoEvaluator& ev) {
  return periodize_batch(which, n, {x}, tol, ev)[0];
}

Estimate biortho_pairing(int m, Family which, int n, double tol, const BiorthoEvaluator& ev) {
  const int nodes = 48 + 4 * (std::abs(m) + std::abs(n));
  const Rule rule = gauss_legendre(nodes, -1.0, 1.0);
  const auto per = periodize_batch(which, n, rule.nodes, tol / 4, ev);
  cplx acc = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * std::exp(cplx(0.0, -pi * m * rule.nodes[i])) * per[i].value;
    err += rule.weights[i] * per[i].error;
  }
  return {acc, err};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::H0:
      return "h0";
    case Family::H:
      return "h";
    case Family::M:
      return "m";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "h0" || s == "H0") return Family::H0;
  if (s == "h" || s == "H") return Family::H;
  if (s == "m" || s == "M") return Family::M;
  throw DomainError("unknown family '" + s + "' (expected h0, h or m)");
}

}  // namespace hypf
