#pragma once

// Quad-precision (float128) theta and λ, used where a contour integrand
// cancels by e^{πn} and double precision runs out.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "hypf/types.hpp"

namespace hypf {

using qreal = boost::multiprecision::float128;
using qcplx = boost::multiprecision::complex128;

struct QuadLambda {
  qcplx lam, comp, dlam;
};

QuadLambda lambda_values_quad(const qcplx& z);
qcplx big_theta3_quad(const qcplx& z);

inline qcplx to_quad(cplx z) { return qcplx(qreal(z.real()), qreal(z.imag())); }
inline cplx to_double(const qcplx& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace hypf
