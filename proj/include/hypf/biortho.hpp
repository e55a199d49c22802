#pragma once

#include <string>
#include <vector>

#include "hypf/types.hpp"

namespace hypf {

enum class Family { H0, H, M };
enum class PathPolicy { DIRECT, LOW_CONTOUR, AUTO };
enum class Precision { DOUBLE, QUAD };

struct BiorthoConfig {
  int max_n = 32;
  int direct_cap = 4;                 // largest |n| for DIRECT in double precision
  PathPolicy path = PathPolicy::AUTO;
  Precision precision = Precision::DOUBLE;
  QuadConfig quad{};                  // Φ_⊓ quadrature inside LOW_CONTOUR
  int low_nodes = 64;                 // starting trapezoid count on Im z = 1/n
  int low_max_nodes = 1024;
  double low_tol = 1e-8;
};

// H₀, H_n, M_n. DIRECT sums the γ(−1,1) contour on fixed trapezoid nodes;
// LOW_CONTOUR integrates e^{−iπnz}Φ_‖(x; z) over −1+i/n → 1+i/n.
class BiorthoEvaluator {
 public:
  explicit BiorthoEvaluator(const BiorthoConfig& cfg = {});
  const BiorthoConfig& config() const { return cfg_; }

  Estimate h0(double x) const;
  Estimate hn(int n, double x) const;
  Estimate mn(int n, double x) const;

  // which = H with n = 0 means H₀.
  std::vector<Estimate> eval(Family which, int n, const std::vector<double>& xs) const;

  // n ≥ 1 (any n for H₀). deriv is the order of d/dx applied to the kernel.
  std::vector<Estimate> direct(Family which, int n, const std::vector<double>& xs, Precision p,
                               int deriv = 0) const;
  std::vector<Estimate> low_contour(Family which, int n, const std::vector<double>& xs) const;

  // Path that eval() uses for H_n or M_n with n ≥ 1.
  PathPolicy resolve(int n) const;

 private:
  void check_n(int n) const;
  std::vector<Estimate> eval_positive(Family which, int n, const std::vector<double>& xs) const;
  BiorthoConfig cfg_;
};

const BiorthoEvaluator& default_evaluator();

Estimate h0(double x);
Estimate hn(int n, double x);
Estimate mn(int n, double x);

// Envelopes min{3/2, 3/(1+x²)} and min{π⁶n²/4, π⁶n²/(2(1+x²))}.
double h0_envelope(double x);
double hn_envelope(int n, double x);

// Σ_k f(x+2k). The k ≠ 0 terms are folded through the inversion symmetry into
// T₁ of the partner function (H_n ↔ M_n, H₀ ↔ H₀), whose far tail is summed
// from its Taylor jet at 0 with Hurwitz zeta values.
Estimate periodize(Family which, int n, double x, double tol = 1e-5,
                   const BiorthoEvaluator& ev = default_evaluator());
std::vector<Estimate> periodize_batch(Family which, int n, const std::vector<double>& xs,
                                      double tol = 1e-5,
                                      const BiorthoEvaluator& ev = default_evaluator());

// ∫_ℝ e^{−iπmx} f(x) dx = ∫_{−1}^{1} e^{−iπmx} Σ_k f(x+2k) dx.
Estimate biortho_pairing(int m, Family which, int n, double tol = 1e-5,
                         const BiorthoEvaluator& ev = default_evaluator());

const char* family_name(Family f);
Family parse_family(const std::string& s);

}  // namespace hypf
