#pragma once

// Theta triple (Θ₂, Θ₃, Θ₄) at a point of the upper half-plane, generic over
// the real type so the same code serves double and float128.

#include <array>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <complex>

#include "hypf/types.hpp"

namespace hypf::detail {

template <class C>
struct ThetaTriple {
  C t2, t3, t4;
};

// λ, 1 − λ and λ′ read off one theta triple.
template <class C>
struct LambdaTriple {
  C lam, comp, dlam;
};

// Direct q-series at a point with |q| small. θ₂ here is 2e^{iπz/4}Σ_{n≥0} q^{n(n+1)}.
template <class R, class C>
ThetaTriple<C> theta_series(const C& z, const R& tol) {
  using std::abs;
  using std::exp;
  const R pi = boost::math::constants::pi<R>();
  const C ipi(R(0), pi);
  const C q = exp(ipi * z);
  const C q2 = q * q;
  C s2(R(1)), s3(R(1)), s4(R(1));
  C sq = q;        // q^{n²}
  C step_sq = q;   // q^{2n−1}
  C sp = q2;       // q^{n(n+1)}
  C step_sp = q2;  // q^{2n}
  for (int n = 1; n < 4000; ++n) {
    if (n > 1) {
      step_sq *= q2;
      sq *= step_sq;
      step_sp *= q2;
      sp *= step_sp;
    }
    const C t = R(2) * sq;
    s3 += t;
    s4 += (n % 2 == 0) ? t : C(-t);
    s2 += sp;
    const R scale = std::max(R(1), R(abs(s3)));
    if (R(abs(t)) < tol * scale && R(abs(sp)) < tol * scale) break;
  }
  const C pre = R(2) * exp(ipi * z / R(4));
  return {pre * s2, s3, s4};
}

// Moves z into the SL₂(ℤ) fundamental domain with z ↦ z − m and z ↦ −1/z,
// carrying multipliers and the kind permutation, then sums the series there.
template <class R, class C>
ThetaTriple<C> theta_triple(C z, const R& tol) {
  using std::abs;
  using std::exp;
  using std::round;
  using std::sqrt;
  const R pi = boost::math::constants::pi<R>();
  std::array<C, 3> mult{C(R(1)), C(R(1)), C(R(1))};
  std::array<int, 3> idx{0, 1, 2};
  const C i_unit(R(0), R(1));

  auto compose = [&](const std::array<C, 3>& d, const std::array<int, 3>& sigma) {
    for (int k = 0; k < 3; ++k) {
      mult[k] *= d[idx[k]];
      idx[k] = sigma[idx[k]];
    }
  };

  for (int it = 0; it < 10000; ++it) {
    const R m = round(z.real());
    if (m != R(0)) {
      z -= C(m);
      const long long mi = static_cast<long long>(m);
      const long long r8 = ((mi % 8) + 8) % 8;
      const C phase = exp(C(R(0), pi * R(r8) / R(4)));
      const bool odd = (r8 % 2) != 0;
      compose({phase, C(R(1)), C(R(1))}, {0, odd ? 2 : 1, odd ? 1 : 2});
    }
    if (R(abs(z)) >= R(1)) break;
    const C zn = C(R(-1)) / z;
    const C s = sqrt(-i_unit * zn);
    compose({s, s, s}, {2, 1, 0});
    z = zn;
  }
  const ThetaTriple<C> base = theta_series<R, C>(z, tol);
  const std::array<C, 3> v{base.t2, base.t3, base.t4};
  return {mult[0] * v[idx[0]], mult[1] * v[idx[1]], mult[2] * v[idx[2]]};
}

template <class R, class C>
LambdaTriple<C> lambda_triple(const C& z, const R& tol) {
  const ThetaTriple<C> t = theta_triple<R, C>(z, tol);
  const C a2 = t.t2 * t.t2, a3 = t.t3 * t.t3, a4 = t.t4 * t.t4;
  const C f2 = a2 * a2, f3 = a3 * a3, f4 = a4 * a4;
  const R pi = boost::math::constants::pi<R>();
  const C lam = f2 / f3;
  return {lam, f4 / f3, C(R(0), pi) * lam * f4};
}

}  // namespace hypf::detail
