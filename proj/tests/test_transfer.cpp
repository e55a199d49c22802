#include <doctest.h>

#include <cmath>

#include "hypf/transfer.hpp"

using namespace hypf;

TEST_CASE("Chebyshev-Lobatto nodes") {
  const auto x = chebyshev_nodes(9);
  REQUIRE(x.size() == 9);
  CHECK(x.front() == doctest::Approx(-1.0));
  CHECK(x.back() == doctest::Approx(1.0));
  CHECK(std::abs(x[4]) < 1e-15);
  for (std::size_t i = 1; i < x.size(); ++i) CHECK(x[i] > x[i - 1]);
}

TEST_CASE("grid interpolation and integral") {
  const GridFunction f = GridFunction::sample([](double x) { return cplx(std::cos(x), x * x); });
  for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999})
    CHECK(std::abs(f(x) - cplx(std::cos(x), x * x)) < 1e-9);
  CHECK(std::abs(grid_integral(f) - cplx(2.0 * std::sin(1.0), 2.0 / 3.0)) < 1e-12);
  CHECK(f.value_at_zero == cplx(1.0));
}

TEST_CASE("Hurwitz tail against an explicit sum") {
  for (int s : {2, 3, 4})
    for (double x : {-0.8, 0.0, 0.35, 1.0}) {
      double sum = 0.0;
      const int K = 7;
      for (int k = 200000; k > K; --k) sum += std::pow(2.0 * k - x, -s) + std::pow(-2.0 * k - x, -s);
      // integral estimate of the terms beyond 200000
      const double M = 200000.5;
      sum += (std::pow(2.0 * M - x, 1 - s) + (s % 2 == 0 ? 1 : -1) * std::pow(2.0 * M + x, 1 - s)) / (2.0 * (s - 1));
      CHECK(std::abs(hurwitz_tail(s, K, x) - sum) < 1e-12);
    }
}

TEST_CASE("T1 of the constant at 0") {
  const GridFunction one = GridFunction::sample([](double) { return cplx(1.0); });
  const GridFunction t = transfer_apply(one, 0, 1000, 1e-10);
  CHECK(std::abs(t.value_at_zero - pi * pi / 12.0) < 1e-12);
  // Series oracle: Σ_{k≠0}(2k)⁻² summed to 10⁶ plus its integral tail.
  double s = 0.0;
  for (int k = 1000000; k >= 1; --k) s += 2.0 / (4.0 * k * k);
  s += 2.0 / (4.0 * 1000000.5);
  CHECK(std::abs(t.value_at_zero - s) < 1e-11);
}

TEST_CASE("mass identity") {
  for (int N = 1; N <= 3; ++N) CHECK(std::abs(grid_integral(transfer_iterate(N)) - 2.0) < 1e-4);
}

TEST_CASE("iterates stay even and monotone on [0, 1]") {
  for (int N = 1; N <= 4; ++N) {
    const GridFunction f = transfer_iterate(N);
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(f.values[i] - f.values[m - 1 - i]) < 1e-12);
    for (std::size_t i = m / 2 + 1; i < m; ++i) CHECK(f.values[i].real() >= f.values[i - 1].real() - 1e-12);
  }
}

TEST_CASE("T1 of an odd function stays odd") {
  const GridFunction f = GridFunction::sample([](double x) { return cplx(std::sin(3.0 * x)); });
  const GridFunction t = transfer_apply(f);
  const std::size_t m = t.size();
  for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(t.values[i] + t.values[m - 1 - i]) < 1e-10);
}

TEST_CASE("higher orders") {
  const GridFunction one = GridFunction::sample([](double) { return cplx(1.0); });
  const GridFunction t = transfer_apply(one, 2, 1000, 1e-10);
  // Σ_{k≠0}(2k)⁻⁴ = ζ(4)/8
  CHECK(std::abs(t.value_at_zero - std::pow(pi, 4) / 720.0) < 1e-12);
  CHECK_THROWS_AS(transfer_apply(one, 0, 0), DomainError);
}

TEST_CASE("tail bound enforces the tolerance") {
  const GridFunction f = GridFunction::sample([](double x) { return cplx(std::sin(40.0 * x)); });
  CHECK_THROWS_AS(transfer_apply(f, 0, 2, 1e-12), NumericalError);
}

TEST_CASE("fixed relations") {
  CHECK(fixed_relation_residual(0).worst() < 1e-5);
  for (int n : {1, -1, 2, -2}) {
    const FixedRelation r = fixed_relation_residual(n);
    CHECK(r.plus < 1e-4);
    CHECK(r.minus < 1e-4);
  }
}

TEST_CASE("contraction and positivity") {
  const double bound = pi * pi / 4.0 - 1.0;
  CHECK(contraction_check(2) <= bound);
  CHECK(contraction_check(3) <= bound);
  for (int N = 1; N <= 5; ++N) CHECK(transfer_iterate(N).value_at_zero.real() > 0.0);
  CHECK_THROWS_AS(contraction_check(1), DomainError);
}
