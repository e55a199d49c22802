#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hypf/types.hpp"

namespace hypf {

// Truncated power series with exact integer coefficients.
using IntSeries = std::vector<mpz_class>;

IntSeries series_mul(const IntSeries& a, const IntSeries& b, int order);
IntSeries series_inverse(const IntSeries& a, int order);  // needs a[0] = ±1

// Exact θ-power series in the nome u, truncated at u^order.
IntSeries theta2_series(int order);             // Σ_{n≥0} u^{n(n+1)}
IntSeries theta3_series(int order, int sign);   // θ₃(sign·u)
IntSeries series_pow(const IntSeries& a, int k, int order);

// Exact polynomial S(z) = Σ_{k=1..n} s_k z^k with rational coefficients.
struct RationalPoly {
  int n = 0;
  std::vector<mpq_class> coeffs;  // coeffs[k], k = 0..n; coeffs[0] = 0

  mpq_class operator()(const mpq_class& z) const;
  std::vector<double> to_double() const;
};

// 1/λ_D(u) = (1/16)u⁻¹(1 + c₁u + c₂u² + …), λ_D(u) = 16uθ₂(u)⁴/θ₃(u)⁴.
struct LaurentTable {
  int order = 0;
  std::vector<mpq_class> inv_lambda_d;  // inv_lambda_d[j] is the coefficient of u^{j−1}
};

LaurentTable laurent_table(int order);

// S_n with S_n(1/λ_D(u)) − u⁻ⁿ holomorphic at 0 and S_n(0) = 0.
RationalPoly schwarz_poly(int n, const LaurentTable& table);

// Constant term of S_n(1/λ_D(u)) − u⁻ⁿ, which equals −Δ_n(0).
mpq_class schwarz_constant_term(int n, const LaurentTable& table);

// Δ_n(0) = (−1)ⁿ r₄(n), cross-checked against the Laurent constant term.
mpz_class delta_n_at_zero(int n);

// Immutable cache of S_1..S_nmax built from one Laurent table.
class SchwarzFamily {
 public:
  explicit SchwarzFamily(int nmax = 32);
  int nmax() const { return static_cast<int>(polys_.size()); }
  const RationalPoly& poly(int n) const;
  const std::vector<double>& coeffs(int n) const;  // double copies, index k = 0..n

  static const SchwarzFamily& shared();

 private:
  std::vector<RationalPoly> polys_;
  std::vector<std::vector<double>> doubles_;
};

// R_n(z) = S_n(1/λ(z)) by Horner in 1/λ.
cplx eval_R_triangle(int n, cplx z);
cplx eval_S_double(int n, cplx w);  // S_n(w) with double coefficients

}  // namespace hypf
