#pragma once

#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "hypf/hfs.hpp"
#include "hypf/types.hpp"

namespace hypf {

// Lattice samples U(πn, 0) for |n| ≤ N and U(0, πn) for 0 < |n| ≤ N.
// ratio > 0 declares |sample_n| ≤ C·ratio^n beyond N; ratio = 0 fits it from the last 4.
struct KGSamples {
  int N = 0;
  std::map<int, cplx> ux;
  std::map<int, cplx> uy;
  double ratio = 0.0;
};

// U_φ(x, y) = ∫ e^{ixt + iy/t} φ(t) dt.
Estimate u_phi(const TestFunction& phi, double x, double y);
KGSamples samples_from(const TestFunction& phi, int N);

// R_n(x, y). Contour formulas on x ≥ 0, y ≤ 0; R_n = 0 on x ≤ 0, y ≥ 0 for n ≥ 1;
// R₀(x, y) = R₀(−y, −x) = R₀(−x, −y) moves R₀ there. Other sign patterns throw DomainError.
Estimate r_interp(int n, double x, double y);
// R_0..R_nmax at one point, sharing the exponential factor.
std::vector<Estimate> r_interp_all(int nmax, double x, double y);

// Truncated interpolation series on x ≥ 0, y ≤ 0. The error includes the sample
// tail Σ_{n>N} a_n·π⁷n²/2 with a_n extrapolated geometrically; NumericalError when
// the fitted ratio is not below 1 or the tail exceeds tol.
Estimate kg_reconstruct(const KGSamples& s, double x, double y,
                        double tol = std::numeric_limits<double>::infinity());

// U(b,d) − U(b,c) − U(a,d) + U(a,c) + ∬ U over [a,b]×[c,d].
Estimate kg_residual(const std::function<cplx(double, double)>& U, double a, double b, double c,
                     double d, const QuadConfig& quad = {});

// K₀(x) = ∫_1^∞ (t²−1)^{−1/2} e^{−xt} dt and K₁(x) = ∫_0^∞ exp(−x√(t²+1)) dt, x > 0.
double hankel_k0(double x);
double hankel_k1(double x);

// Bounds for x, y ≥ 0: |R₀(x,−y)| ≤ 5K₀(√(2π(x+y+1))),
// |R_n(x,−y)| ≤ 2π³e^{2πn}(x+y)/√(x+y+1)·K₁(2√(π(x+y+1))).
double r0_envelope(double x, double y);
double rn_envelope(int n, double x, double y);

}  // namespace hypf
