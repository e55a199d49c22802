#include "hypf/faber.hpp"

#include <cmath>

#include "hypf/modular.hpp"

namespace hypf {

IntSeries series_mul(const IntSeries& a, const IntSeries& b, int order) {
  IntSeries r(order + 1, 0);
  const int na = std::min<int>(order, static_cast<int>(a.size()) - 1);
  const int nb = static_cast<int>(b.size()) - 1;
  for (int i = 0; i <= na; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= nb && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

IntSeries series_inverse(const IntSeries& a, int order) {
  if (a.empty() || (a[0] != 1 && a[0] != -1))
    throw DomainError("series inverse needs a unit constant term");
  IntSeries r(order + 1, 0);
  r[0] = a[0];
  for (int k = 1; k <= order; ++k) {
    mpz_class acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * r[k - j];
    r[k] = -acc * a[0];
  }
  return r;
}

IntSeries series_pow(const IntSeries& a, int k, int order) {
  IntSeries r(order + 1, 0);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = series_mul(r, a, order);
  return r;
}

IntSeries theta2_series(int order) {
  IntSeries s(order + 1, 0);
  for (int n = 0; n * (n + 1) <= order; ++n) s[n * (n + 1)] += 1;
  return s;
}

IntSeries theta3_series(int order, int sign) {
  IntSeries s(order + 1, 0);
  s[0] = 1;
  for (int n = 1; n * n <= order; ++n) s[n * n] += (sign < 0 && n % 2 == 1) ? -2 : 2;
  return s;
}

mpq_class RationalPoly::operator()(const mpq_class& z) const {
  mpq_class acc = 0;
  for (int k = n; k >= 1; --k) acc = (acc + coeffs[k]) * z;
  return acc;
}

std::vector<double> RationalPoly::to_double() const {
  std::vector<double> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) out[k] = coeffs[k].get_d();
  return out;
}

namespace {

// L(u) = θ₃(u)⁴/θ₂(u)⁴ as an exact integer series.
IntSeries l_series(int order) {
  const IntSeries t3 = theta3_series(order, 1);
  const IntSeries t2 = theta2_series(order);
  const IntSeries t34 = series_pow(t3, 4, order);
  const IntSeries t24 = series_pow(t2, 4, order);
  return series_mul(t34, series_inverse(t24, order), order);
}

IntSeries table_l(const LaurentTable& table, int order) {
  IntSeries l(order + 1, 0);
  for (int j = 0; j <= order; ++j) {
    const mpq_class v = table.inv_lambda_d[j] * 16;
    if (v.get_den() != 1) throw NumericalError("Laurent table is not 16-integral");
    l[j] = v.get_num();
  }
  return l;
}

struct Built {
  std::vector<mpz_class> t;  // t_k = s_k/16^k, k = 0..n
  mpz_class constant;        // constant term of S_n(1/λ_D) − u⁻ⁿ
};

// Triangular solve: t_n = 1, t_j = −Σ_{k>j} t_k [u^{k−j}] L^k.
Built solve(int n, const std::vector<IntSeries>& powers) {
  Built b;
  b.t.assign(n + 1, 0);
  b.t[n] = 1;
  for (int j = n - 1; j >= 1; --j) {
    mpz_class acc = 0;
    for (int k = j + 1; k <= n; ++k) acc += b.t[k] * powers[k][k - j];
    b.t[j] = -acc;
  }
  b.constant = 0;
  for (int k = 1; k <= n; ++k) b.constant += b.t[k] * powers[k][k];
  return b;
}

std::vector<IntSeries> l_powers(const IntSeries& l, int kmax, int order) {
  std::vector<IntSeries> p(kmax + 1);
  p[0] = IntSeries(order + 1, 0);
  p[0][0] = 1;
  for (int k = 1; k <= kmax; ++k) p[k] = series_mul(p[k - 1], l, order);
  return p;
}

RationalPoly to_poly(int n, const Built& b) {
  RationalPoly poly;
  poly.n = n;
  poly.coeffs.assign(n + 1, 0);
  mpz_class scale = 1;
  for (int k = 1; k <= n; ++k) {
    scale *= 16;
    poly.coeffs[k] = mpq_class(b.t[k] * scale);
  }
  return poly;
}

}  // namespace

LaurentTable laurent_table(int order) {
  if (order < 1) throw DomainError("Laurent table order must be positive");
  const IntSeries l = l_series(order);
  LaurentTable t;
  t.order = order;
  t.inv_lambda_d.resize(order + 1);
  for (int j = 0; j <= order; ++j) t.inv_lambda_d[j] = mpq_class(l[j], 16);
  return t;
}

RationalPoly schwarz_poly(int n, const LaurentTable& table) {
  if (n < 1) throw DomainError("schwarz_poly needs n >= 1");
  if (table.order < n) throw DomainError("Laurent table order below n");
  const auto powers = l_powers(table_l(table, n), n, n);
  return to_poly(n, solve(n, powers));
}

mpq_class schwarz_constant_term(int n, const LaurentTable& table) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (table.order < n) throw DomainError("Laurent table order below n");
  const auto powers = l_powers(table_l(table, n), n, n);
  return mpq_class(solve(n, powers).constant);
}

mpz_class delta_n_at_zero(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const mpz_class value = (n % 2 == 0 ? 1 : -1) * mpz_class(static_cast<long>(r4(n)));
  static const LaurentTable table = laurent_table(64);
  if (n <= table.order && schwarz_constant_term(n, table) != -value)
    throw NumericalError("Laurent constant term disagrees with r4");
  return value;
}

SchwarzFamily::SchwarzFamily(int nmax) {
  if (nmax < 1) throw DomainError("SchwarzFamily needs nmax >= 1");
  const IntSeries l = l_series(nmax);
  const auto powers = l_powers(l, nmax, nmax);
  polys_.reserve(nmax);
  for (int n = 1; n <= nmax; ++n) {
    polys_.push_back(to_poly(n, solve(n, powers)));
    doubles_.push_back(polys_.back().to_double());
  }
}

const RationalPoly& SchwarzFamily::poly(int n) const {
  if (n < 1 || n > nmax()) throw DomainError("Schwarz polynomial index out of range");
  return polys_[n - 1];
}

const std::vector<double>& SchwarzFamily::coeffs(int n) const {
  if (n < 1 || n > nmax()) throw DomainError("Schwarz polynomial index out of range");
  return doubles_[n - 1];
}

const SchwarzFamily& SchwarzFamily::shared() {
  static const SchwarzFamily family(32);
  return family;
}

cplx eval_S_double(int n, cplx w) {
  const auto& c = SchwarzFamily::shared().coeffs(n);
  cplx acc = 0.0;
  for (int k = n; k >= 1; --k) acc = (acc + c[k]) * w;
  return acc;
}

cplx eval_R_triangle(int n, cplx z) {
  const cplx lam = lambda(z);
  if (lam == 0.0 || !std::isfinite(std::abs(lam)))
    throw NumericalError("lambda underflow: Im z too large");
  return eval_S_double(n, 1.0 / lam);
}

}  // namespace hypf
