#include "hypf/modular_quad.hpp"

#include <limits>

#include "hypf/detail/theta_impl.hpp"

namespace hypf {

namespace {
const qreal quad_tol = std::numeric_limits<qreal>::epsilon() / 16;
}

QuadLambda lambda_values_quad(const qcplx& z) {
  if (!(z.imag() > 0)) throw DomainError("argument must lie in the upper half-plane");
  const auto l = detail::lambda_triple<qreal, qcplx>(z, quad_tol);
  return {l.lam, l.comp, l.dlam};
}

qcplx big_theta3_quad(const qcplx& z) {
  if (!(z.imag() > 0)) throw DomainError("argument must lie in the upper half-plane");
  return detail::theta_triple<qreal, qcplx>(z, quad_tol).t3;
}

}  // namespace hypf
