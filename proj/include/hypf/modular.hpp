#pragma once

#include <vector>

#include "hypf/types.hpp"

namespace hypf {

// Exponent tables for the three nome series and cached r₄(n).
class NomeSeriesTable {
 public:
  explicit NomeSeriesTable(int order);

  int order() const { return order_; }
  const std::vector<int>& theta2_exps() const { return theta2_exps_; }  // n(n+1), n ≥ 0
  const std::vector<int>& theta3_exps() const { return theta3_exps_; }  // n², n ≥ 1
  const std::vector<int>& theta4_signs() const { return theta4_signs_; } // (−1)ⁿ, n ≥ 1
  long long r4(int n) const;

  static const NomeSeriesTable& shared();

 private:
  int order_;
  std::vector<int> theta2_exps_, theta3_exps_, theta4_signs_;
  std::vector<long long> r4_;
};

long long r4(int n);

struct ThetaValues {
  cplx t2, t3, t4;
};

struct LambdaValues {
  cplx lam;   // λ(z)
  cplx comp;  // 1 − λ(z), computed as Θ₄⁴/Θ₃⁴
  cplx dlam;  // λ′(z)
};

// θ₂(q) = Σ_{n≥0} q^{n(n+1)}, θ₃(q) = 1 + 2Σ q^{n²}, θ₄(q) = θ₃(−q).
cplx theta(int kind, cplx q, const EvalConfig& cfg = {});

// Θ₂(z) = 2e^{iπz/4}θ₂(e^{iπz}), Θ₃(z) = θ₃(e^{iπz}), Θ₄(z) = θ₄(e^{iπz}).
cplx big_theta(int kind, cplx z, const EvalConfig& cfg = {});
ThetaValues big_thetas(cplx z, const EvalConfig& cfg = {});

cplx lambda(cplx z, const EvalConfig& cfg = {});
cplx lambda_prime(cplx z, const EvalConfig& cfg = {});
LambdaValues lambda_values(cplx z, const EvalConfig& cfg = {});

// F(1/2, 1/2; 1; z) off the cut [1, ∞).
cplx hyp_half(cplx z);
// Pieces used by hyp_half, exposed for cross-checks.
cplx hyp_half_power_series(cplx z);
cplx hyp_half_barnes(cplx w);  // F(1 − w)
cplx hyp_half_agm(cplx z);
inline constexpr double hyp_switch_radius = 0.7;

// τ(z) = iF(1 − z)/F(z).
cplx schwarz_tau(cplx z);
// Δ(x) = F(1/(1 + x))/F(x/(1 + x)) for x > 0.
double delta_ratio(double x);

}  // namespace hypf
