#include "hypf/kleingordon.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "hypf/contour.hpp"
#include "hypf/quadrature.hpp"

namespace hypf {

Estimate u_phi(const TestFunction& phi, double x, double y) { return bilateral_transform(phi, x, y); }

KGSamples samples_from(const TestFunction& phi, int N) {
  if (N < 0) throw DomainError("N must be nonnegative");
  KGSamples s;
  s.N = N;
  for (int n = -N; n <= N; ++n) {
    s.ux[n] = u_phi(phi, pi * n, 0.0).value;
    if (n != 0) s.uy[n] = u_phi(phi, 0.0, pi * n).value;
  }
  return s;
}

namespace {

// R_0..R_nmax at (X, −Y), X, Y ≥ 0, from the contour table in quad precision.
std::vector<Estimate> contour_values(int nmax, double Xd, double Yd) {
  const ContourTableQ& tab = contour_table_quad();
  if (nmax > tab.nmax) throw DomainError("n exceeds " + std::to_string(tab.nmax));
  const qreal X(Xd), Y(Yd);
  const qreal pi_q = boost::math::constants::pi<qreal>();
  const std::size_t size = tab.size();
  std::vector<qcplx> e(size), lin(size);
  for (std::size_t j = 0; j < size; ++j) {
    const qcplx z = tab.zeta[j];
    const qcplx inv = qreal(1) / z;
    e[j] = exp(qcplx(qreal(0), qreal(1)) * (X * z - Y * inv)) * tab.weight[j];
    lin[j] = X + Y * inv * inv;
  }
  std::vector<Estimate> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    qcplx fine(0), coarse(0);
    qreal l1(0);
    for (std::size_t j = 0; j < size; ++j) {
      const qcplx term = n == 0 ? tab.theta3_4[j] * e[j] : lin[j] * e[j] * tab.r[n - 1][j];
      fine += term;
      l1 += abs(term);
      if (tab.coarse(j)) coarse += term;
    }
    coarse *= qreal(2);
    const qreal scale = n == 0 ? qreal(0.5) : qreal(1) / (2 * pi_q * n);
    const qreal err = (abs(fine - coarse) + 8 * std::numeric_limits<qreal>::epsilon() * l1) * scale;
    out[n] = {to_double(fine * scale), static_cast<double>(err)};
  }
  return out;
}

}  // namespace

std::vector<Estimate> r_interp_all(int nmax, double x, double y) {
  if (nmax < 0) throw DomainError("n must be nonnegative");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("x and y must be finite");
  if (x >= 0.0 && y <= 0.0) return contour_values(nmax, x, -y);
  if (x <= 0.0 && y >= 0.0) {
    std::vector<Estimate> out(nmax + 1, Estimate{0.0, 0.0});
    out[0] = contour_values(0, -x, y)[0];
    return out;
  }
  throw DomainError("R_n is evaluated only where x and y have opposite signs");
}

Estimate r_interp(int n, double x, double y) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (x >= 0.0 && y <= 0.0) {
    if (n == 0) return contour_values(0, x, -y)[0];
    return contour_values(n, x, -y)[n];
  }
  return r_interp_all(n, x, y)[n];
}

namespace {

double sample_magnitude(const KGSamples& s, int n) {
  double a = 0.0;
  for (int k : {n, -n}) {
    if (auto it = s.ux.find(k); it != s.ux.end()) a += std::abs(it->second);
    if (auto it = s.uy.find(k); it != s.uy.end()) a += std::abs(it->second);
  }
  return a;
}

double tail_bound(const KGSamples& s) {
  const int N = s.N;
  const double last = sample_magnitude(s, N);
  if (last == 0.0) return 0.0;
  double ratio = s.ratio;
  if (ratio <= 0.0) {
    // Least-squares slope of log a_n over the last four positive samples.
    std::vector<std::pair<double, double>> pts;
    for (int n = std::max(1, N - 3); n <= N; ++n) {
      const double a = sample_magnitude(s, n);
      if (a > 0.0) pts.emplace_back(n, std::log(a));
    }
    if (pts.size() < 2) throw NumericalError("too few nonzero samples to fit a decay rate");
    double mx = 0, my = 0;
    for (auto [u, v] : pts) {
      mx += u;
      my += v;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (auto [u, v] : pts) {
      sxy += (u - mx) * (v - my);
      sxx += (u - mx) * (u - mx);
    }
    ratio = std::exp(sxy / sxx);
  }
  if (!(ratio < 1.0)) throw NumericalError("sample decay too slow for a convergent tail");
  const double env = std::pow(pi, 7) / 2.0;
  double tail = 0.0, a = last;
  for (int n = N + 1; n <= N + 2000; ++n) {
    a *= ratio;
    const double term = a * env * double(n) * n;
    tail += term;
    if (term < 1e-3 * tail * (1.0 - ratio)) break;
  }
  return tail;
}

}  // namespace

Estimate kg_reconstruct(const KGSamples& s, double x, double y, double tol) {
  if (!(x >= 0.0 && y <= 0.0)) throw DomainError("reconstruction needs x >= 0 and y <= 0");
  if (s.N < 0) throw DomainError("N must be nonnegative");
  auto at = [](const std::map<int, cplx>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? cplx(0.0) : it->second;
  };
  const std::vector<Estimate> r = r_interp_all(s.N, x, y);
  const std::vector<Estimate> rs = r_interp_all(s.N, -y, -x);
  Estimate acc{at(s.ux, 0) * r[0].value, std::abs(at(s.ux, 0)) * r[0].error};
  // The U(−πn,0)R_n(−x,−y) and U(0,πn)R_n(y,x) terms vanish on this quadrant.
  for (int n = 1; n <= s.N; ++n) {
    const cplx a = at(s.ux, n), b = at(s.uy, -n);
    acc.value += a * r[n].value + b * rs[n].value;
    acc.error += std::abs(a) * r[n].error + std::abs(b) * rs[n].error;
  }
  const double tail = tail_bound(s);
  if (tail > tol) throw NumericalError("sample decay too slow for the requested tolerance");
  acc.error += tail;
  return acc;
}

Estimate kg_residual(const std::function<cplx(double, double)>& U, double a, double b, double c,
                     double d, const QuadConfig& quad) {
  if (!(b > a) || !(d > c)) throw DomainError("rectangle needs a < b and c < d");
  const cplx corners = U(b, d) - U(b, c) - U(a, d) + U(a, c);
  auto area = [&](int n) {
    const Rule rx = gauss_legendre(n, a, b), ry = gauss_legendre(n, c, d);
    cplx s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += rx.weights[i] * ry.weights[j] * U(rx.nodes[i], ry.nodes[j]);
    return s;
  };
  cplx prev = area(8);
  for (int n = 16; n <= 128; n *= 2) {
    const cplx cur = area(n);
    const double diff = std::abs(cur - prev);
    if (diff <= quad.abs_tol) return {corners + cur, diff};
    prev = cur;
  }
  throw NumericalError("kg_residual: area integral did not converge");
}

namespace {

// ∫_0^∞ cosh(ks)·e^{−x cosh s} ds with t = cosh s (k = 0) or t = sinh s (k = 1).
double hankel_integral(int k, double x) {
  if (!(x > 0.0)) throw DomainError("the Hankel functions need x > 0");
  // Beyond s_max the integrand is below e^{−745}·cosh(s_max).
  const double s_max = std::acosh(1.0 + 745.0 / x);
  auto f = [k, x](double s) {
    const double w = k == 0 ? 1.0 : std::cosh(s);
    return w * std::exp(-x * std::cosh(s));
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, s_max, 15, 1e-14);
}

}  // namespace

double hankel_k0(double x) { return hankel_integral(0, x); }
double hankel_k1(double x) { return hankel_integral(1, x); }

double r0_envelope(double x, double y) {
  if (x < 0.0 || y < 0.0) throw DomainError("envelope needs x, y >= 0");
  return 5.0 * hankel_k0(std::sqrt(2.0 * pi * (x + y + 1.0)));
}

double rn_envelope(int n, double x, double y) {
  if (n < 1) throw DomainError("n must be positive");
  if (x < 0.0 || y < 0.0) throw DomainError("envelope needs x, y >= 0");
  const double s = x + y + 1.0;
  return 2.0 * std::pow(pi, 3) * std::exp(2.0 * pi * n) * (x + y) / std::sqrt(s) *
         hankel_k1(2.0 * std::sqrt(pi * s));
}

}  // namespace hypf
