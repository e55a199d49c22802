#pragma once

#include <vector>

#include "hypf/cfrac.hpp"
#include "hypf/types.hpp"

namespace hypf {

// x^δζ − (−x)^{1−δ} with x⁰ = 1 and (−x)¹ = −x taken literally, so x = 0 is
// allowed: δ = 0 gives ζ, δ = 1 gives −1.
cplx genfun_weight(int delta, double x, cplx zeta);

// Point on γ(−1,1) for t > 0 and dζ/dt.
cplx gamma_point(double t);
cplx gamma_deriv(double t);

// Φ^δ_∞(x; z) = (1/2πi)∫_γ λ′(z)dζ/((λ(z) − λ(ζ))·weight²).
Estimate phi_inf(int delta, double x, cplx z, const QuadConfig& cfg = {}, double clearance = 1e-9);
std::vector<Estimate> phi_inf_batch(int delta, const std::vector<double>& xs, cplx z,
                                    const QuadConfig& cfg = {}, double clearance = 1e-9);

// Same integrand over Π(−1,1): −1 → −1+2i → 1+2i → 1. Requires z in 𝔈⁰.
Estimate phi_pi(int delta, double x, cplx z, const QuadConfig& cfg = {});
// No membership check; used once the caller has classified the point.
std::vector<Estimate> phi_pi_raw(int delta, const std::vector<double>& xs, cplx w,
                                 const QuadConfig& cfg = {});

// Continuation Φ^δ_‖(x; z) on |Re z| ≤ 1 through the even rational partition.
Estimate phi_strip(int delta, double x, cplx z, const QuadConfig& cfg = {},
                   const ClassifyConfig& ccfg = {});
std::vector<Estimate> phi_strip_batch(int delta, const std::vector<double>& xs, cplx z,
                                      const QuadConfig& cfg = {}, const ClassifyConfig& ccfg = {});

// Lower edge of the vertical Π segments; below it |λ| exceeds 10⁵⁰.
inline constexpr double pi_contour_cut = 0.025;

}  // namespace hypf
