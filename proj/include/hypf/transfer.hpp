#pragma once

#include <functional>
#include <vector>

#include "hypf/biortho.hpp"
#include "hypf/types.hpp"

namespace hypf {

// Chebyshev–Lobatto points cos(πj/(count−1)) in increasing order.
std::vector<double> chebyshev_nodes(int count);

// Samples on [−1, 1] read back by 4-point Lagrange interpolation on the
// nearest nodes.
struct GridFunction {
  std::vector<double> nodes;
  std::vector<cplx> values;
  cplx value_at_zero{0.0};
  double interp_error = 0.0;  // from fourth differences of the samples

  cplx operator()(double x) const;
  std::size_t size() const { return nodes.size(); }

  static GridFunction sample(const std::function<cplx(double)>& f, int count = 257);
  static GridFunction from_values(std::vector<double> nodes, std::vector<cplx> values);
};

// Σ_{|k|>K} (2k − x)^{−s} for s ≥ 2, via Hurwitz zeta values.
double hurwitz_tail(int s, int K, double x);

// (T_{m+1} f)(x) = Σ_{0<|k|≤K} f(1/(2k−x))/(2k−x)^{m+2} + f(0)·Σ_{|k|>K}(2k−x)^{−(m+2)}.
// Throws NumericalError when the tail bound Lip(f near 0)·Σ|2k−x|^{−(m+3)} exceeds tol.
GridFunction transfer_apply(const GridFunction& f, int m = 0, int K = 1000, double tol = 1e-6);

// T₁^N[1] on the default grid.
GridFunction transfer_iterate(int N, int K = 1000, int count = 257);

// ∫_{−1}^{1} f dx with Clenshaw–Curtis weights on the Lobatto nodes.
cplx grid_integral(const GridFunction& f);

struct FixedRelation {
  double plus = 0.0;   // max |(I + T₁)[H⁺_n] − e^{iπnx}|, or |(I + T₁)[2H₀] − 1| for n = 0
  double minus = 0.0;  // max |(I − T₁)[H⁻_n] − e^{iπnx}|; 0 for n = 0
  double worst() const { return plus > minus ? plus : minus; }
};

// H^±_n = 2H_n ± 2M_n sampled on the grid; T₁ truncation tails are held below 1e−5.
FixedRelation fixed_relation_residual(int n, const BiorthoEvaluator& ev = default_evaluator(),
                                      int count = 257, int K = 1000);

// T₁^N[1](0) / T₁^{N−1}[1](0).
double contraction_check(int N, int K = 1000);

}  // namespace hypf
