#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hypf/biortho.hpp"
#include "hypf/cfrac.hpp"
#include "hypf/genfun.hpp"
#include "hypf/modular.hpp"

using namespace hypf;

namespace {

// (1/2πi)∫ λ′(z)dζ/((λ(z) − λ(ζ))w²) over −1 → −1+2i → 1+2i → 1 with adaptive Gauss–Kronrod.
cplx phi_pi_oracle(int delta, double x, cplx z) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const LambdaValues lz = lambda_values(z);
  auto integrand = [&](cplx zeta, cplx dzeta) {
    const cplx w = genfun_weight(delta, x, zeta);
    return lz.dlam * dzeta / ((lz.lam - lambda(zeta)) * w * w);
  };
  auto part = [&](auto path) {
    auto re = [&](double s) { return path(s).real(); };
    auto im = [&](double s) { return path(s).imag(); };
    return cplx(GK::integrate(re, 0.0, 1.0, 20, 1e-13), GK::integrate(im, 0.0, 1.0, 20, 1e-13));
  };
  // Vertical legs start at Im ζ = 0.02, where |λ| > 1e60.
  const double lo = 0.02, hi = 2.0;
  const cplx left = part([&](double s) { return integrand(cplx(-1.0, lo + (hi - lo) * s), cplx(0.0, hi - lo)); });
  const cplx top = part([&](double s) { return integrand(cplx(-1.0 + 2.0 * s, hi), cplx(2.0, 0.0)); });
  const cplx right = part([&](double s) { return integrand(cplx(1.0, hi - (hi - lo) * s), cplx(0.0, lo - hi)); });
  return (left + top + right) / (2.0 * pi * I);
}

}  // namespace

TEST_CASE("weight at x = 0") {
  const cplx zeta(0.3, 0.8);
  CHECK(genfun_weight(0, 0.0, zeta) == zeta);
  CHECK(genfun_weight(1, 0.0, zeta) == cplx(-1.0));
  CHECK(genfun_weight(0, 0.7, zeta) == zeta + 0.7);
  CHECK(genfun_weight(1, 0.7, zeta) == 0.7 * zeta - 1.0);
}

TEST_CASE("phi_inf at 3i against the H_n series") {
  const cplx y(0.0, 3.0);
  cplx sum = 0.0;
  for (int n = 1; n <= 4; ++n) sum += double(n) * hn(n, 0.5).value * std::exp(I * pi * double(n) * y);
  CHECK(std::abs(phi_inf(0, 0.5, y).value - 2.0 * pi * pi * sum) < 1e-6);
  const Estimate v = phi_inf(1, 0.0, cplx(0.1, 1.5));
  CHECK(std::isfinite(std::abs(v.value)));
}

TEST_CASE("generating identity at Im y = 2 for H_n and M_n") {
  for (cplx y : {cplx(0.0, 2.0), cplx(-0.2, 2.0)})
    for (double x : {0.0, 0.7, -2.3})
      for (int delta : {0, 1}) {
        cplx sum = 0.0;
        for (int n = 1; n <= 4; ++n) {
          const cplx f = delta == 0 ? hn(n, x).value : mn(n, x).value;
          sum += double(n) * f * std::exp(I * pi * double(n) * y);
        }
        CHECK(std::abs(sum - phi_inf(delta, x, y).value / (2.0 * pi * pi)) < 1e-6);
      }
}

TEST_CASE("phi_inf bound at Im z = 2") {
  for (double t = -1.0; t <= 1.0; t += 0.25)
    for (double x : {-3.0, -0.4, 0.0, 0.9, 5.0})
      for (int delta : {0, 1}) CHECK(std::abs(phi_inf(delta, x, cplx(t, 2.0)).value) <= 5.0 * pi * pi);
}

TEST_CASE("transformation law under z + 2 and -1/z") {
  for (cplx z : {cplx(0.3, 1.5), cplx(-0.6, 1.1)})
    for (double x : {0.0, 0.8, -1.7})
      for (int delta : {0, 1}) {
        const cplx a = phi_inf(delta, x, z).value;
        CHECK(std::abs(phi_inf(delta, x, z + 2.0).value - a) < 1e-8);
        CHECK(std::abs(-a - phi_inf(1 - delta, x, -1.0 / z).value / (z * z)) < 1e-8);
      }
}

TEST_CASE("phi_pi matches phi_inf on E^0 and an independent quadrature") {
  for (cplx z : {cplx(0.45, 0.6), cplx(0.2, 0.9), cplx(-0.3, 0.75)}) {
    REQUIRE(classify_point(z).height == 1);
    for (double x : {0.0, 1.0, -0.6})
      for (int delta : {0, 1}) CHECK(std::abs(phi_pi(delta, x, z).value - phi_inf(delta, x, z).value) < 1e-8);
  }
  const cplx p = phi_pi(0, 1.0, cplx(0.0, 0.5)).value;
  CHECK(std::abs(p - phi_pi_oracle(0, 1.0, cplx(0.0, 0.5))) < 1e-8);
  CHECK_THROWS_AS(phi_pi(0, 1.0, cplx(0.1, 3.0)), DomainError);
}

TEST_CASE("vertical legs below Im 0.05 contribute below 1e-10") {
  // |λ(±1 + it)| ≥ ((17 − 12√2)/16)e^{π/t} makes the integrand negligible there.
  const LambdaValues lz = lambda_values(cplx(0.0, 0.5));
  double worst = 0.0;
  for (double t = 0.001; t < 0.05; t += 0.001)
    for (double s : {-1.0, 1.0}) {
      const cplx zeta(s, t);
      const cplx w = genfun_weight(0, 1.0, zeta);
      worst = std::max(worst, std::abs(lz.dlam / ((lz.lam - lambda(zeta)) * w * w)));
      CHECK(std::abs(lambda(zeta)) >= (17.0 - 12.0 * std::sqrt(2.0)) / 16.0 * std::exp(pi / t));
    }
  CHECK(worst * 0.05 / (2 * pi) < 1e-10);
}

TEST_CASE("continuation agrees with phi_inf on E_inf and obeys the strip bound") {
  for (cplx z : {cplx(0.3, 1.2), cplx(-0.9, 0.6), cplx(0.7, 0.8)}) {
    REQUIRE(classify_point(z).kind == CellKind::E_INF);
    CHECK(std::abs(phi_strip(0, 0.4, z).value - phi_inf(0, 0.4, z).value) < 1e-8);
  }
  for (double re = -0.9; re <= 0.9; re += 0.3)
    for (double im = 0.1; im <= 1.0; im += 0.15) {
      const cplx z(re, im);
      CHECK(std::abs(phi_strip(1, 0.5, z, {}, {1e-9, true}).value) <= 20 * pi * pi / std::pow(im, 3));
    }
}

TEST_CASE("continuation is continuous across cell boundaries") {
  // Transversals through the unit circle at i and through its image under φ_(1).
  const CFWord one{{1}};
  for (auto map : {std::function<cplx(cplx)>([](cplx w) { return w; }),
                   std::function<cplx(cplx)>([&](cplx w) { return phi_apply(one, w); })})
    for (double theta : {pi / 2, 1.2}) {
      auto jump = [&](int delta, double gap) {
        const cplx inner = map((1.0 - gap) * std::exp(I * theta));
        const cplx outer = map((1.0 + gap) * std::exp(I * theta));
        REQUIRE(classify_point(inner).height != classify_point(outer).height);
        return std::abs(phi_strip(delta, 0.3, inner).value - phi_strip(delta, 0.3, outer).value);
      };
      // The jump shrinks in proportion to the gap, so no offset remains on the arc.
      for (int delta : {0, 1}) {
        const double j7 = jump(delta, 1e-7), j8 = jump(delta, 1e-8);
        CHECK(j8 < 1e-6);
        CHECK(j8 <= 0.2 * j7 + 1e-11);
      }
    }
}
