#pragma once

#include <functional>
#include <valarray>
#include <vector>

#include "hypf/types.hpp"

namespace hypf {

using CVec = std::valarray<cplx>;

struct VecEstimate {
  CVec value;
  double error = 0.0;   // max over components
  bool converged = true;
};

// f(t, out) writes dim values at t.
using VecIntegrand = std::function<void(double, CVec&)>;

// Globally adaptive 31-point Gauss–Kronrod on [a, b], starting from `panels`
// equal panels. Stops when the summed error is below abs_tol, or below the
// rounding floor 64·eps·∫|f|.
VecEstimate integrate_gk(const VecIntegrand& f, std::size_t dim, double a, double b,
                         double abs_tol, int max_subdiv, int panels = 1);

Estimate integrate_gk(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                      int max_subdiv, int panels = 1);

// Fixed Gauss–Legendre nodes and weights on [a, b].
struct Rule {
  std::vector<double> nodes, weights;
};
Rule gauss_legendre(int n, double a, double b);

}  // namespace hypf
