#include "hypf/contour.hpp"

#include <gmpxx.h>

#include <limits>
#include <type_traits>

#include "hypf/detail/theta_impl.hpp"
#include "hypf/faber.hpp"

namespace hypf {

namespace {

// Three-term double split keeps 113 bits of a big integer.
qreal mpz_to_qreal(const mpz_class& z) {
  mpz_class rest = z;
  qreal out = 0;
  for (int i = 0; i < 3; ++i) {
    const double part = rest.get_d();
    out += qreal(part);
    rest -= mpz_class(part);
  }
  return out;
}

template <class R>
R coeff_as(const mpq_class& q) {
  if constexpr (std::is_same_v<R, double>) {
    return q.get_d();
  } else {
    return mpz_to_qreal(q.get_num()) / mpz_to_qreal(q.get_den());
  }
}

template <class R, class C>
ContourTable<R, C> build_table() {
  ContourTable<R, C> tab;
  tab.half = static_cast<int>(contour_s_max * contour_steps_per_unit);
  tab.h = R(1) / R(contour_steps_per_unit);
  const R tol = std::numeric_limits<R>::epsilon() / 16;
  const std::size_t size = 2 * tab.half + 1;
  tab.zeta.resize(size);
  tab.weight.resize(size);
  tab.theta3_4.resize(size);
  tab.inv_lam.resize(size);
  tab.inv_comp.resize(size);
  for (int j = -tab.half; j <= tab.half; ++j) {
    const std::size_t idx = j + tab.half;
    using std::exp;
    const R t = exp(R(j) * tab.h);
    const C den = C(t, R(-1));
    const C zeta = C(t, R(1)) / den;
    // dζ/ds = t·dζ/dt = t·(−2i)/(t − i)²
    const C dz = C(R(0), R(-2)) * t / (den * den);
    const auto th = detail::theta_triple<R, C>(zeta, tol);
    const C a2 = th.t2 * th.t2, a3 = th.t3 * th.t3, a4 = th.t4 * th.t4;
    const C f2 = a2 * a2, f3 = a3 * a3, f4 = a4 * a4;
    tab.zeta[idx] = zeta;
    tab.weight[idx] = dz * tab.h;
    tab.theta3_4[idx] = f3;
    tab.inv_lam[idx] = f3 / f2;
    tab.inv_comp[idx] = f3 / f4;
  }
  const SchwarzFamily& fam = SchwarzFamily::shared();
  tab.nmax = std::min(contour_nmax, fam.nmax());
  tab.r.assign(tab.nmax, std::vector<C>(size));
  tab.r_inv.assign(tab.nmax, std::vector<C>(size));
  for (int n = 1; n <= tab.nmax; ++n) {
    const RationalPoly& p = fam.poly(n);
    std::vector<R> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = coeff_as<R>(p.coeffs[k]);
    for (std::size_t idx = 0; idx < size; ++idx) {
      C a(R(0)), b(R(0));
      const C w = tab.inv_lam[idx], v = tab.inv_comp[idx];
      for (int k = n; k >= 1; --k) {
        a = (a + c[k]) * w;
        b = (b + c[k]) * v;
      }
      tab.r[n - 1][idx] = a;
      tab.r_inv[n - 1][idx] = b;
    }
  }
  return tab;
}

}  // namespace

const ContourTableD& contour_table_double() {
  static const ContourTableD tab = build_table<double, cplx>();
  return tab;
}

const ContourTableQ& contour_table_quad() {
  static const ContourTableQ tab = build_table<qreal, qcplx>();
  return tab;
}

}  // namespace hypf
