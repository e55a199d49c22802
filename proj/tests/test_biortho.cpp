#include <doctest.h>

#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>

#include "hypf/biortho.hpp"

using namespace hypf;

namespace {

// Σ_{|k|>K} (x + 2k)^{−2} = (ψ₁(K + 1 + x/2) + ψ₁(K + 1 − x/2))/4.
double inverse_square_tail(int K, double x) {
  using boost::math::trigamma;
  return (trigamma(K + 1 + x / 2) + trigamma(K + 1 - x / 2)) / 4.0;
}

std::vector<double> grid(double a, double b, int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(a + (b - a) * i / (count - 1));
  return xs;
}

// Σ_{|k|≤K} f(x + 2k) plus the x⁻² tail with the coefficient lim_{t→∞} t²f(t).
cplx brute_periodize(Family which, int n, double x, cplx tail_coeff, int K = 200) {
  std::vector<double> xs;
  for (int k = -K; k <= K; ++k) xs.push_back(x + 2.0 * k);
  cplx s = 0.0;
  for (const Estimate& e : default_evaluator().eval(which, n, xs)) s += e.value;
  return s + tail_coeff * inverse_square_tail(K, x);
}

}  // namespace

TEST_CASE("special values at 0") {
  CHECK(std::abs(hn(1, 0.0).value - 8.0 / (pi * pi)) < 1e-12);
  CHECK(std::abs(mn(1, 0.0).value + 4.0 / (pi * pi)) < 1e-12);
}

TEST_CASE("H0 symmetries and envelope") {
  CHECK(std::abs(h0(1.7).value - h0(-1.7).value) < 1e-12);
  for (double x : {0.2, 0.7, 1.3, 3.0, -2.2}) {
    CHECK(std::abs(h0(-1.0 / x).value - x * x * h0(x).value) < 1e-9);
    CHECK(std::abs(h0(x).value.imag()) < 1e-12);
  }
  for (double x : grid(-20.0, 20.0, 161)) CHECK(std::abs(h0(x).value) <= h0_envelope(x));
}

TEST_CASE("H_n and M_n envelopes and symmetries, n <= 4") {
  const auto xs = grid(-20.0, 20.0, 161);
  for (int n = 1; n <= 4; ++n)
    for (Family f : {Family::H, Family::M}) {
      const auto v = default_evaluator().eval(f, n, xs);
      const auto neg = default_evaluator().eval(f, -n, xs);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(std::abs(v[i].value) <= hn_envelope(n, xs[i]));
        // f_{−n}(x) = f_n(−x); the grid is symmetric.
        CHECK(std::abs(neg[i].value - v[xs.size() - 1 - i].value) < 1e-9);
      }
    }
  for (double x : {0.4, 1.5, -2.5}) CHECK(std::abs(mn(2, x).value - hn(2, -1.0 / x).value / (x * x)) < 1e-9);
}

TEST_CASE("decay of H_n at large |x|") {
  for (int n = 1; n <= 3; ++n) {
    for (double x : grid(-50.0, 50.0, 101)) CHECK(std::abs(hn(n, x).value) * (1 + x * x) <= pow(pi, 6) * n * n / 2);
    // x²H_n(x) = M_n(−1/x) → M_n(0).
    const cplx limit = mn(n, 0.0).value;
    const cplx far = 1e6 * hn(n, 1e3).value;
    CHECK(std::abs(far - limit) < 1e-2 * std::max(1.0, std::abs(limit)));
  }
}

TEST_CASE("H0 second differences are smooth") {
  // Curvature estimates at two step sizes agree, so the grid shows no spikes.
  for (double x = -3.0; x <= 3.0; x += 0.25) {
    auto d2 = [&](double h) { return (h0(x + h).value.real() - 2 * h0(x).value.real() + h0(x - h).value.real()) / (h * h); };
    const double a = d2(0.02), b = d2(0.01);
    CHECK(std::fabs(a) < 50.0);
    CHECK(std::fabs(a - b) < 1e-3 * std::max(1.0, std::fabs(b)));
  }
}

TEST_CASE("periodization examples") {
  CHECK(std::abs(periodize(Family::H0, 0, 0.3).value - 0.5) < 1e-5);
  CHECK(std::abs(periodize(Family::M, 1, 0.7).value) < 1e-5);
  CHECK(std::abs(periodize(Family::H, 1, 0.0).value - 0.5) < 1e-5);
  CHECK(std::abs(2.0 * periodize(Family::H, 2, 0.25).value - std::exp(2.0 * pi * I * 0.25)) < 1e-5);
  CHECK(std::abs(periodize(Family::M, 2, 0.25).value) < 1e-5);
}

TEST_CASE("periodization against brute-force sums with K = 200") {
  CHECK(std::abs(2.0 * brute_periodize(Family::H0, 0, 0.3, h0(0.0).value) - 1.0) < 1e-5);
  // t²H_n(t) → M_n(0) and t²M_n(t) → H_n(0).
  const cplx h2 = brute_periodize(Family::H, 2, 0.25, mn(2, 0.0).value);
  CHECK(std::abs(2.0 * h2 - std::exp(2.0 * pi * I * 0.25)) < 1e-5);
  CHECK(std::abs(brute_periodize(Family::M, 2, 0.25, hn(2, 0.0).value)) < 1e-5);
  CHECK(std::abs(h2 - periodize(Family::H, 2, 0.25).value) < 1e-5);
}

TEST_CASE("pairing examples") {
  CHECK(std::abs(biortho_pairing(2, Family::H, 2).value - 1.0) < 1e-5);
  CHECK(std::abs(biortho_pairing(1, Family::H, 2).value) < 1e-5);
  CHECK(std::abs(biortho_pairing(0, Family::H0, 0).value - 1.0) < 1e-5);
  CHECK(std::abs(biortho_pairing(0, Family::H, 0).value - 1.0) < 1e-5);
  CHECK(std::abs(biortho_pairing(-3, Family::H, -3).value - 1.0) < 1e-5);
  CHECK(std::abs(biortho_pairing(3, Family::M, 3).value) < 1e-5);
}

TEST_CASE("evaluation paths") {
  BiorthoConfig direct_cfg;
  direct_cfg.path = PathPolicy::DIRECT;
  BiorthoConfig low_cfg;
  low_cfg.path = PathPolicy::LOW_CONTOUR;
  const BiorthoEvaluator direct(direct_cfg), low(low_cfg);
  CHECK(std::abs(direct.hn(3, 1.1).value - low.hn(3, 1.1).value) < 1e-5);
  CHECK(std::abs(direct.mn(2, -0.4).value - low.mn(2, -0.4).value) < 1e-5);
  CHECK_THROWS_AS(direct.hn(5, 0.3), NumericalError);
  CHECK(default_evaluator().resolve(3) == PathPolicy::DIRECT);
  CHECK(default_evaluator().resolve(7) == PathPolicy::LOW_CONTOUR);
  // Quad precision lifts the cap; the two paths agree at n = 7.
  BiorthoConfig quad_cfg;
  quad_cfg.precision = Precision::QUAD;
  const BiorthoEvaluator quad(quad_cfg);
  CHECK(std::abs(quad.hn(7, 0.6).value - low.hn(7, 0.6).value) < 1e-5);
  CHECK_THROWS_AS(default_evaluator().hn(40, 0.1), DomainError);
  CHECK(parse_family("M") == Family::M);
  CHECK_THROWS_AS(parse_family("Q"), DomainError);
}
