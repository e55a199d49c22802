#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypf {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Bad arguments or unsupported inputs. The CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical target could not be met. The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point sits within boundary_eps of a partition arc.
class BoundaryAmbiguous : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

struct EvalConfig {
  double abs_tol = 1e-17;    // series stop: next term below abs_tol * max(1, |partial|)
  double max_nome = 0.999;   // largest |q| accepted by theta()
  double min_im = 0.05;      // arguments below this are always reduced first
};

struct QuadConfig {
  double abs_tol = 1e-10;
  double t_max = 40.0;       // gamma contour truncated to t in [1/t_max, t_max]
  int max_subdiv = 4000;
};

// A value with its estimated absolute error.
struct Estimate {
  cplx value;
  double error = 0.0;
};

}  // namespace hypf
