#pragma once

// Trapezoid nodes on γ(−1,1): ζ = (t+i)/(t−i), t = e^s, s = jh for |j| ≤ m.
// Every integrand built on these nodes decays like exp(−(π/2)(t+1/t)) at both
// ends, so the rule converges geometrically as h shrinks. Halving the node set
// (even j only) gives the step-2h sum used as the error estimate.

#include <complex>
#include <vector>

#include "hypf/modular_quad.hpp"
#include "hypf/types.hpp"

namespace hypf {

template <class R, class C>
struct ContourTable {
  R h;
  int half = 0;                 // nodes j = −half..half, stored at index j + half
  std::vector<C> zeta;          // ζ_j
  std::vector<C> weight;        // h·dζ/ds at s_j
  std::vector<C> theta3_4;      // Θ₃(ζ_j)⁴
  std::vector<C> inv_lam;       // 1/λ(ζ_j)
  std::vector<C> inv_comp;      // 1/(1 − λ(ζ_j)) = 1/λ(−1/ζ_j)
  int nmax = 0;
  std::vector<std::vector<C>> r;      // r[n−1][j] = S_n(1/λ(ζ_j)) = R_n(ζ_j)
  std::vector<std::vector<C>> r_inv;  // r_inv[n−1][j] = R_n(−1/ζ_j)

  std::size_t size() const { return zeta.size(); }
  bool coarse(std::size_t idx) const { return (static_cast<int>(idx) - half) % 2 == 0; }
};

using ContourTableD = ContourTable<double, cplx>;
using ContourTableQ = ContourTable<qreal, qcplx>;

// Tables with s ∈ [−5, 5], h = 1/64 and R_n for n ≤ 32, built once on first use.
const ContourTableD& contour_table_double();
const ContourTableQ& contour_table_quad();

inline constexpr double contour_s_max = 5.0;
inline constexpr int contour_steps_per_unit = 64;
inline constexpr int contour_nmax = 32;

}  // namespace hypf
