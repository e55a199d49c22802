#include "hypf/hfs.hpp"

#include <algorithm>
#include <cmath>

#include "hypf/quadrature.hpp"

namespace hypf {

namespace {

using Batch = std::function<std::vector<cplx>(const std::vector<double>&)>;

constexpr int panel_points = 16;

Batch scalar_batch(const std::function<cplx(double)>& g) {
  return [&g](const std::vector<double>& ts) {
    std::vector<cplx> v(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) v[i] = g(ts[i]);
    return v;
  };
}

Rule composite_rule(double a, double b, int panels) {
  Rule out;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const Rule r = gauss_legendre(panel_points, a + p * w, p + 1 == panels ? b : a + (p + 1) * w);
    out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
    out.weights.insert(out.weights.end(), r.weights.begin(), r.weights.end());
  }
  return out;
}

cplx phase(double omega, double t) { return std::exp(cplx(0.0, -omega * t)); }

// ∫_a^b g e^{−iωt} with panels no wider than half a period of the total phase,
// whose variation beyond ω(b − a) is span. Panels double until two successive
// sums agree to 1e−12 relative to ∫|g|.
Estimate oscillatory(const Batch& g, double a, double b, double omega, double span) {
  if (!(b > a)) return {0.0, 0.0};
  const double halves = ((b - a) * std::fabs(omega) + span) / pi;
  int p = std::max(4, static_cast<int>(std::ceil(halves)));
  auto sum = [&](int panels, double& l1) {
    const Rule r = composite_rule(a, b, panels);
    const std::vector<cplx> v = g(r.nodes);
    cplx acc = 0.0;
    l1 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc += r.weights[i] * v[i] * phase(omega, r.nodes[i]);
      l1 += r.weights[i] * std::abs(v[i]);
    }
    return acc;
  };
  double l1 = 0.0;
  cplx coarse = sum(p, l1);
  for (;;) {
    p *= 2;
    const cplx fine = sum(p, l1);
    const double diff = std::abs(fine - coarse);
    if (diff <= 1e-12 * l1 || p >= 4096 || p >= 64 * std::max(4.0, halves))
      return {fine, diff + 1e-15 * l1};
    coarse = fine;
  }
}

// ∫_T^∞ g e^{−iωt} (side = +1) or ∫_{−∞}^{−T} (side = −1). Two integration-by-parts
// terms for ω ≠ 0; a t^{−decay} law for ω = 0.
Estimate oscillatory_tail(const Batch& g, double T, double omega, double decay, int side) {
  const double t = side * T;
  const double h = 1e-4 * T;
  const std::vector<cplx> v = g({t, t + h, t - h});
  if (omega == 0.0) {
    if (!(decay > 1.0)) throw DomainError("a whole-line tail needs decay > 1");
    const cplx val = v[0] * T / (decay - 1.0);
    return {val, std::abs(val) * decay / T};
  }
  const cplx dg = (v[1] - v[2]) / (2.0 * h);
  const cplx io(0.0, omega);
  const cplx val = phase(omega, t) * (v[0] / io + dg / (io * io)) * double(side);
  const double next = std::abs(dg) * (decay + 1.0) / T / std::pow(std::fabs(omega), 3);
  return {val, next};
}

void accumulate(Estimate& acc, const Estimate& e) {
  acc.value += e.value;
  acc.error += e.error;
}

void check_N(int N) {
  if (N < 0) throw DomainError("N must be nonnegative");
}

}  // namespace

std::vector<cplx> TestFunction::eval(const std::vector<double>& ts) const {
  if (batch) return batch(ts);
  std::vector<cplx> v(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) v[i] = f(ts[i]);
  return v;
}

Estimate fourier_integral(const std::function<cplx(double)>& g, double a, double b, double omega) {
  return oscillatory(scalar_batch(g), a, b, omega, 0.0);
}

Estimate bilateral_transform(const TestFunction& phi, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("x and y must be finite");
  const auto psi = [&phi, x](const std::vector<double>& us) {
    std::vector<double> ts(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) ts[i] = -1.0 / us[i];
    std::vector<cplx> v = phi.eval(ts);
    for (std::size_t i = 0; i < us.size(); ++i)
      v[i] *= std::exp(cplx(0.0, x * ts[i])) / (us[i] * us[i]);
    return v;
  };
  const auto outer = [&phi, y](const std::vector<double>& ts) {
    std::vector<cplx> v = phi.eval(ts);
    for (std::size_t i = 0; i < ts.size(); ++i) v[i] *= std::exp(cplx(0.0, y / ts[i]));
    return v;
  };
  switch (phi.support) {
    case Support::INTERVAL: {
      const double a = phi.a, b = phi.b;
      if (!(b > a)) throw DomainError("INTERVAL support needs a < b");
      if (y == 0.0) return oscillatory(outer, a, b, -x, 0.0);
      if (a <= 0.0 && b >= 0.0) throw DomainError("support touches 0");
      // t = −1/u turns e^{iy/t} into e^{−iyu}.
      if (x == 0.0) return oscillatory(psi, -1.0 / a, -1.0 / b, y, 0.0);
      return oscillatory(outer, a, b, -x, std::fabs(y) * std::fabs(1.0 / a - 1.0 / b));
    }
    case Support::WHOLE_LINE: {
      const double T = phi.cutoff;
      if (!(T > 1.0)) throw DomainError("cutoff must exceed 1");
      const double span = 1.0 - 1.0 / T;
      Estimate acc{0.0, 0.0};
      accumulate(acc, oscillatory(outer, 1.0, T, -x, std::fabs(y) * span));
      accumulate(acc, oscillatory(outer, -T, -1.0, -x, std::fabs(y) * span));
      accumulate(acc, oscillatory(psi, 1.0, T, y, std::fabs(x) * span));
      accumulate(acc, oscillatory(psi, -T, -1.0, y, std::fabs(x) * span));
      for (int side : {1, -1}) {
        accumulate(acc, oscillatory_tail(outer, T, -x, phi.decay, side));
        accumulate(acc, oscillatory_tail(psi, T, y, 2.0, side));
      }
      return acc;
    }
    default:
      throw DomainError("the transform needs an integrable function");
  }
}

TestFunction indicator(double a, double b) {
  if (!(b > a)) throw DomainError("indicator needs a < b");
  TestFunction t;
  t.f = [a, b](double x) { return cplx((x >= a && x <= b) ? 1.0 : 0.0); };
  t.a = a;
  t.b = b;
  return t;
}

TestFunction smooth_bump(double a, double b) {
  if (!(b > a)) throw DomainError("bump needs a < b");
  TestFunction t;
  t.f = [a, b](double x) {
    const double s = (2.0 * x - a - b) / (b - a);
    if (std::fabs(s) >= 1.0) return cplx(0.0);
    return cplx(std::exp(-1.0 / (1.0 - s * s)));
  };
  t.a = a;
  t.b = b;
  return t;
}

TestFunction gaussian_bump(double c, double sigma) {
  if (!(sigma > 0)) throw DomainError("sigma must be positive");
  TestFunction t;
  t.f = [c, sigma](double x) {
    const double d = (x - c) / sigma;
    return std::fabs(d) > 8.0 ? cplx(0.0) : cplx(std::exp(-0.5 * d * d));
  };
  t.a = c - 8.0 * sigma;
  t.b = c + 8.0 * sigma;
  return t;
}

TestFunction from_samples(std::vector<double> ts, std::vector<cplx> vs) {
  if (ts.size() != vs.size() || ts.size() < 2) throw DomainError("need at least two samples");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] > ts[i - 1])) throw DomainError("sample abscissae must increase");
  TestFunction t;
  t.a = ts.front();
  t.b = ts.back();
  t.f = [ts = std::move(ts), vs = std::move(vs)](double x) {
    if (x < ts.front() || x > ts.back()) return cplx(0.0);
    auto it = std::upper_bound(ts.begin(), ts.end(), x);
    std::size_t j = std::min<std::size_t>(it - ts.begin(), ts.size() - 1);
    const double w = (x - ts[j - 1]) / (ts[j] - ts[j - 1]);
    return (1.0 - w) * vs[j - 1] + w * vs[j];
  };
  return t;
}

TestFunction from_biortho(Family which, int n, const BiorthoEvaluator& ev) {
  TestFunction t;
  t.support = Support::WHOLE_LINE;
  t.batch = [which, n, &ev](const std::vector<double>& ts) {
    const auto e = ev.eval(which, n, ts);
    std::vector<cplx> v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i].value;
    return v;
  };
  t.f = [which, n, &ev](double x) { return ev.eval(which, n, std::vector<double>{x})[0].value; };
  t.tail_bound = which == Family::H0 ? 3.0 : std::pow(pi, 6) * n * n / 2.0;
  return t;
}

HFSCoeffs analyze(const TestFunction& f, int N, double tol, const BiorthoEvaluator& ev) {
  check_N(N);
  HFSCoeffs c;
  c.N = N;
  if (f.support == Support::PERIODIC2 || f.support == Support::PERIODIC2_INVERTED) {
    const bool inv = f.support == Support::PERIODIC2_INVERTED;
    const std::function<cplx(double)> g =
        inv ? std::function<cplx(double)>([&f](double u) { return f(-1.0 / u); }) : f.f;
    for (int n = -N; n <= N; ++n) {
      const Estimate e = fourier_integral(g, -1.0, 1.0, pi * n);
      const cplx half = 0.5 * e.value;
      c.error = std::max(c.error, 0.5 * e.error);
      if (n == 0) {
        c.h[0] = half;
      } else if (inv) {
        c.h[n] = 0.0;
        c.m[n] = half;
      } else {
        c.h[n] = half;
        c.m[n] = 0.0;
      }
    }
    if (c.error > tol) throw NumericalError("analyze: tolerance unreachable");
    return c;
  }

  double a = f.a, b = f.b;
  double tail = 0.0;
  if (f.support == Support::WHOLE_LINE) {
    a = -f.cutoff;
    b = f.cutoff;
    // |f H_n| ≤ C|t|^{−decay}·π⁶n²/(2t²) beyond the cutoff, on both sides.
    const double cn = std::pow(pi, 6) * std::max(1, N * N) / 2.0;
    tail = 2.0 * f.tail_bound * cn * std::pow(f.cutoff, -(f.decay + 1.0)) / (f.decay + 1.0);
    if (tail > tol)
      throw NumericalError("analyze: whole-line tail bound " + std::to_string(tail) +
                           " exceeds tol; raise cutoff or declare faster decay");
  } else if (!(b > a)) {
    throw DomainError("INTERVAL support needs a < b");
  }
  const int p = std::max(8, static_cast<int>(std::ceil((b - a) * (N + 1))));
  const Rule r1 = composite_rule(a, b, p), r2 = composite_rule(a, b, 2 * p);
  const std::vector<cplx> f1 = f.eval(r1.nodes), f2 = f.eval(r2.nodes);
  auto coefficient = [&](Family fam, int n) {
    const auto v1 = ev.eval(fam, n, r1.nodes);
    const auto v2 = ev.eval(fam, n, r2.nodes);
    cplx s1 = 0.0, s2 = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) s1 += r1.weights[i] * f1[i] * v1[i].value;
    for (std::size_t i = 0; i < v2.size(); ++i) {
      s2 += r2.weights[i] * f2[i] * v2[i].value;
      err += r2.weights[i] * std::abs(f2[i]) * v2[i].error;
    }
    c.error = std::max(c.error, std::abs(s2 - s1) + err + tail);
    return s2;
  };
  for (int n = -N; n <= N; ++n) {
    c.h[n] = coefficient(n == 0 ? Family::H0 : Family::H, -n);
    if (n != 0) c.m[n] = coefficient(Family::M, -n);
  }
  if (c.error > tol) throw NumericalError("analyze: tolerance unreachable");
  return c;
}

cplx synthesize(const HFSCoeffs& c, double x) {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  cplx acc = 0.0;
  for (const auto& [n, v] : c.h) acc += (n == 0) ? v : v * std::exp(cplx(0.0, pi * n * x));
  bool any_m = false;
  for (const auto& [n, v] : c.m) any_m = any_m || v != 0.0;
  if (!any_m) return acc;
  if (x == 0.0) throw DomainError("synthesize at x = 0 with nonzero m coefficients");
  // e^{−iπn/x} = e^{iπnw}, w = −1/x reduced mod 2 for an accurate phase.
  const double w = std::remainder(-1.0 / x, 2.0);
  for (const auto& [n, v] : c.m) acc += v * std::exp(cplx(0.0, pi * n * w));
  return acc;
}

HFSCoeffs conj_analyze(const TestFunction& phi, int N, double tol) {
  check_N(N);
  HFSCoeffs c;
  c.N = N;
  for (int n = -N; n <= N; ++n) {
    // h*_n = U_φ(−πn, 0), m*_n = U_φ(0, πn).
    const Estimate h = bilateral_transform(phi, -pi * n, 0.0);
    c.h[n] = h.value;
    c.error = std::max(c.error, h.error);
    if (n != 0) {
      const Estimate m = bilateral_transform(phi, 0.0, pi * n);
      c.m[n] = m.value;
      c.error = std::max(c.error, m.error);
    }
  }
  if (c.error > tol) throw NumericalError("conj_analyze: tolerance unreachable");
  return c;
}

std::vector<Estimate> conj_synthesize_batch(const HFSCoeffs& c, const std::vector<double>& xs,
                                            const BiorthoEvaluator& ev) {
  std::vector<Estimate> out(xs.size(), Estimate{0.0, 0.0});
  auto add = [&](Family fam, int n, cplx coef) {
    if (coef == 0.0) return;
    const auto v = ev.eval(fam, n, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[i].value += coef * v[i].value;
      out[i].error += std::abs(coef) * v[i].error;
    }
  };
  for (const auto& [n, v] : c.h) add(n == 0 ? Family::H0 : Family::H, n, v);
  for (const auto& [n, v] : c.m) add(Family::M, n, v);
  return out;
}

Estimate conj_synthesize(const HFSCoeffs& c, double x, const BiorthoEvaluator& ev) {
  return conj_synthesize_batch(c, {x}, ev)[0];
}

HFSCoeffs poisson_coefficients(cplx z, int N) {
  check_N(N);
  if (!(z.imag() > 0)) throw DomainError("the Poisson kernel needs Im z > 0");
  const double x = z.real(), y = z.imag();
  HFSCoeffs c;
  c.N = N;
  c.h[0] = 1.0;
  const cplx wp(y, x), wm(y, -x);
  for (int n = 1; n <= N; ++n) {
    c.h[n] = std::exp(-pi * n * wp);
    c.m[n] = std::exp(-pi * n / wp);
    c.h[-n] = std::exp(-pi * n * wm);
    c.m[-n] = std::exp(-pi * n / wm);
  }
  return c;
}

}  // namespace hypf
