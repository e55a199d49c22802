#include "hypf/transfer.hpp"

#include <algorithm>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <cmath>

namespace hypf {

std::vector<double> chebyshev_nodes(int count) {
  if (count < 9) throw DomainError("a grid needs at least 9 nodes");
  std::vector<double> x(count);
  for (int j = 0; j < count; ++j) x[j] = -std::cos(pi * j / (count - 1));
  if (count % 2 == 1) x[count / 2] = 0.0;
  return x;
}

namespace {

double fourth_difference_bound(const std::vector<cplx>& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 4 < v.size(); ++i) {
    const cplx d = v[i] - 4.0 * v[i + 1] + 6.0 * v[i + 2] - 4.0 * v[i + 3] + v[i + 4];
    worst = std::max(worst, std::abs(d));
  }
  // Cubic Lagrange remainder is at most 9/16·h⁴|f⁗|/24 and Δ⁴ ≈ h⁴f⁗.
  return worst * 9.0 / 16.0 / 24.0;
}

}  // namespace

cplx GridFunction::operator()(double x) const {
  const std::size_t n = nodes.size();
  if (x < nodes.front() - 1e-14 || x > nodes.back() + 1e-14)
    throw DomainError("grid function evaluated outside its nodes");
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  std::size_t right = static_cast<std::size_t>(it - nodes.begin());
  std::size_t lo = right >= 2 ? right - 2 : 0;
  lo = std::min(lo, n - 4);
  cplx acc = 0.0;
  for (std::size_t i = lo; i < lo + 4; ++i) {
    double w = 1.0;
    for (std::size_t j = lo; j < lo + 4; ++j)
      if (j != i) w *= (x - nodes[j]) / (nodes[i] - nodes[j]);
    acc += w * values[i];
  }
  return acc;
}

GridFunction GridFunction::from_values(std::vector<double> nodes, std::vector<cplx> values) {
  if (nodes.size() != values.size()) throw DomainError("nodes and values differ in length");
  if (nodes.size() < 9) throw DomainError("a grid needs at least 9 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < -1.0 || nodes[i] > 1.0) throw DomainError("grid nodes must lie in [-1,1]");
    if (i > 0 && !(nodes[i] > nodes[i - 1])) throw DomainError("grid nodes must increase");
  }
  GridFunction g;
  g.nodes = std::move(nodes);
  g.values = std::move(values);
  g.interp_error = fourth_difference_bound(g.values);
  g.value_at_zero = g(0.0);
  return g;
}

GridFunction GridFunction::sample(const std::function<cplx(double)>& f, int count) {
  std::vector<double> x = chebyshev_nodes(count);
  std::vector<cplx> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = f(x[i]);
  return from_values(std::move(x), std::move(v));
}

namespace {

// ζ(s, a) = (−1)^s ψ^{(s−1)}(a)/(s−1)!.
double hurwitz_zeta(int s, double a) {
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return sign * boost::math::polygamma(s - 1, a) / boost::math::factorial<double>(s - 1);
}

// Σ_{|k|>K} |2k − x|^{−s} for |x| ≤ 1.
double abs_tail(int s, int K, double x) {
  return std::pow(2.0, -s) * (hurwitz_zeta(s, K + 1 - x / 2) + hurwitz_zeta(s, K + 1 + x / 2));
}

}  // namespace

double hurwitz_tail(int s, int K, double x) {
  if (s < 2) throw DomainError("hurwitz_tail needs s >= 2");
  const double neg = (s % 2 == 0) ? 1.0 : -1.0;
  return std::pow(2.0, -s) * (hurwitz_zeta(s, K + 1 - x / 2) + neg * hurwitz_zeta(s, K + 1 + x / 2));
}

GridFunction transfer_apply(const GridFunction& f, int m, int K, double tol) {
  if (K < 1) throw DomainError("K must be at least 1");
  if (m < 0) throw DomainError("order m must be nonnegative");
  // Lipschitz constant of f on the nodes nearest 0, where the far arguments accumulate.
  const auto mid = std::lower_bound(f.nodes.begin(), f.nodes.end(), 0.0) - f.nodes.begin();
  double lip = 0.0;
  for (auto i = std::max<long>(1, mid - 2); i <= std::min<long>(f.size() - 1, mid + 2); ++i)
    lip = std::max(lip, std::abs(f.values[i] - f.values[i - 1]) / (f.nodes[i] - f.nodes[i - 1]));
  std::vector<cplx> out(f.size());
  double worst_tail = 0.0, weight = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.nodes[i];
    cplx acc = 0.0;
    double wsum = 0.0;
    for (int k = K; k >= 1; --k) {
      for (const double d : {2.0 * k - x, -2.0 * k - x}) {
        const double u = 1.0 / d;
        const double w = std::pow(std::fabs(u), m + 2) * ((m % 2 == 1 && d < 0) ? -1.0 : 1.0);
        acc += w * f(u);
        wsum += std::fabs(w);
      }
    }
    acc += f.value_at_zero * hurwitz_tail(m + 2, K, x);
    out[i] = acc;
    worst_tail = std::max(worst_tail, lip * abs_tail(m + 3, K, x));
    weight = std::max(weight, wsum);
  }
  if (worst_tail > tol)
    throw NumericalError("transfer_apply: K = " + std::to_string(K) + " too small for tol");
  GridFunction g = GridFunction::from_values(f.nodes, std::move(out));
  g.interp_error += worst_tail + weight * f.interp_error;
  return g;
}

GridFunction transfer_iterate(int N, int K, int count) {
  if (N < 0) throw DomainError("iteration count must be nonnegative");
  GridFunction g = GridFunction::sample([](double) { return cplx(1.0); }, count);
  for (int i = 0; i < N; ++i) g = transfer_apply(g, 0, K);
  return g;
}

cplx grid_integral(const GridFunction& f) {
  // Clenshaw–Curtis weights for Lobatto nodes x_j = −cos(πj/n).
  const int n = static_cast<int>(f.size()) - 1;
  const std::vector<double> lob = chebyshev_nodes(n + 1);
  for (int j = 0; j <= n; ++j)
    if (std::fabs(lob[j] - f.nodes[j]) > 1e-15) throw DomainError("grid_integral needs Lobatto nodes");
  cplx acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double theta = pi * j / n;
    double s = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      s += b / (4.0 * k * k - 1.0) * std::cos(2.0 * k * theta);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    acc += c / n * (1.0 - s) * f.values[j];
  }
  return acc;
}

FixedRelation fixed_relation_residual(int n, const BiorthoEvaluator& ev, int count, int K) {
  // Truncation well below the 1e−4 scale of the relations.
  constexpr double tail_tol = 1e-5;
  const std::vector<double> x = chebyshev_nodes(count);
  FixedRelation r;
  if (n == 0) {
    const auto h = ev.eval(Family::H0, 0, x);
    std::vector<cplx> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = 2.0 * h[i].value;
    const GridFunction f = GridFunction::from_values(x, v);
    const GridFunction t = transfer_apply(f, 0, K, tail_tol);
    for (std::size_t i = 0; i < x.size(); ++i)
      r.plus = std::max(r.plus, std::abs(f.values[i] + t.values[i] - 1.0));
    return r;
  }
  const auto h = ev.eval(Family::H, n, x);
  const auto m = ev.eval(Family::M, n, x);
  for (const int sign : {1, -1}) {
    std::vector<cplx> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = 2.0 * h[i].value + 2.0 * sign * m[i].value;
    const GridFunction f = GridFunction::from_values(x, v);
    const GridFunction t = transfer_apply(f, 0, K, tail_tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const cplx target = std::exp(cplx(0.0, pi * n * x[i]));
      worst = std::max(worst, std::abs(f.values[i] + double(sign) * t.values[i] - target));
    }
    (sign > 0 ? r.plus : r.minus) = worst;
  }
  return r;
}

double contraction_check(int N, int K) {
  if (N < 2) throw DomainError("contraction_check needs N >= 2");
  GridFunction g = transfer_iterate(N - 1, K);
  const double prev = g.value_at_zero.real();
  g = transfer_apply(g, 0, K);
  return g.value_at_zero.real() / prev;
}

}  // namespace hypf
