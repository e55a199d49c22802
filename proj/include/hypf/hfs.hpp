#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hypf/biortho.hpp"
#include "hypf/types.hpp"

namespace hypf {

enum class Support { INTERVAL, WHOLE_LINE, PERIODIC2, PERIODIC2_INVERTED };

// INTERVAL: f vanishes off [a, b]. WHOLE_LINE: |f(t)| ≤ tail_bound·min(1, |t|^{−decay})
// with the integrals truncated at |t| = cutoff and the tails estimated from that decay.
// PERIODIC2: f(x+2) = f(x). PERIODIC2_INVERTED: f(−1/x) is 2-periodic.
struct TestFunction {
  std::function<cplx(double)> f;
  // Optional vectorized form of f; quadrature uses it when set.
  std::function<std::vector<cplx>(const std::vector<double>&)> batch;
  Support support = Support::INTERVAL;
  double a = 0.0, b = 0.0;
  double tail_bound = 1.0;
  double decay = 2.0;
  double cutoff = 400.0;

  cplx operator()(double t) const { return f(t); }
  std::vector<cplx> eval(const std::vector<double>& ts) const;
};

TestFunction indicator(double a, double b);
// exp(−1/(1−s²)) with s the affine image of t ∈ (a, b) on (−1, 1).
TestFunction smooth_bump(double a, double b);
// exp(−(t−c)²/(2σ²)) cut at |t − c| = 8σ.
TestFunction gaussian_bump(double c, double sigma);
// Linear interpolation of (t, value) samples on [t_first, t_last].
TestFunction from_samples(std::vector<double> t, std::vector<cplx> v);
// H₀, H_n or M_n as a WHOLE_LINE function (decay 2), evaluated in batches.
TestFunction from_biortho(Family which, int n, const BiorthoEvaluator& ev = default_evaluator());

struct HFSCoeffs {
  int N = 0;
  std::map<int, cplx> h;      // −N..N
  std::map<int, cplx> m;      // −N..N without 0
  double error = 0.0;         // largest per-coefficient error estimate
};

// h_n = ∫ f H_{−n}, m_n = ∫ f M_{−n}.
HFSCoeffs analyze(const TestFunction& f, int N, double tol = 1e-8,
                  const BiorthoEvaluator& ev = default_evaluator());
// h₀ + Σ (h_n e^{iπnx} + m_n e^{−iπn/x}).
cplx synthesize(const HFSCoeffs& c, double x);

// h*_n = ∫ φ e^{−iπnt}, m*_n = ∫ φ e^{iπn/t}.
HFSCoeffs conj_analyze(const TestFunction& phi, int N, double tol = 1e-8);
// h*₀H₀(x) + Σ (h*_n H_n(x) + m*_n M_n(x)).
Estimate conj_synthesize(const HFSCoeffs& c, double x,
                         const BiorthoEvaluator& ev = default_evaluator());
std::vector<Estimate> conj_synthesize_batch(const HFSCoeffs& c, const std::vector<double>& xs,
                                            const BiorthoEvaluator& ev = default_evaluator());

// Starred coefficients of the Poisson kernel P_z(t) = y/(π((t−x)² + y²)), z = x + iy.
HFSCoeffs poisson_coefficients(cplx z, int N);

// ∫_a^b g(t)e^{−iωt} dt with Gauss–Legendre panels no wider than half a period.
Estimate fourier_integral(const std::function<cplx(double)>& g, double a, double b, double omega);

// ∫ φ(t)e^{ixt + iy/t} dt. INTERVAL supports containing 0 need y = 0.
// WHOLE_LINE: |t| ≥ 1 directly, |t| < 1 through t = −1/u, tails from the declared decay.
Estimate bilateral_transform(const TestFunction& phi, double x, double y);

}  // namespace hypf
