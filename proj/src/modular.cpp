#include "hypf/modular.hpp"

#include <cmath>

#include "hypf/detail/theta_impl.hpp"

namespace hypf {

NomeSeriesTable::NomeSeriesTable(int order) : order_(order) {
  if (order < 1) throw DomainError("nome table order must be positive");
  for (int n = 0; n * (n + 1) <= order; ++n) theta2_exps_.push_back(n * (n + 1));
  for (int n = 1; n * n <= order; ++n) {
    theta3_exps_.push_back(n * n);
    theta4_signs_.push_back(n % 2 == 0 ? 1 : -1);
  }
  // θ₃(u)⁴ as an integer series; its coefficients are r₄(n).
  std::vector<long long> t3(order + 1, 0);
  t3[0] = 1;
  for (int e : theta3_exps_) t3[e] += 2;
  auto mul = [order](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(order + 1, 0);
    for (int i = 0; i <= order; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  const auto sq = mul(t3, t3);
  r4_ = mul(sq, sq);
}

long long NomeSeriesTable::r4(int n) const {
  if (n < 1) throw DomainError("r4 needs n >= 1");
  if (n > order_) {
    NomeSeriesTable bigger(2 * n);
    return bigger.r4(n);
  }
  return r4_[n];
}

const NomeSeriesTable& NomeSeriesTable::shared() {
  static const NomeSeriesTable table(256);
  return table;
}

long long r4(int n) { return NomeSeriesTable::shared().r4(n); }

namespace {

void require_upper(cplx z) {
  if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("argument must lie in the upper half-plane");
}

cplx theta_q_series(int kind, cplx q, double tol) {
  cplx s = 1.0;
  if (kind == 2) {
    cplx p = 1.0;
    for (int n = 1; n < 10000; ++n) {
      p *= std::pow(q, 2 * n);  // q^{n(n+1)} from q^{(n−1)n}
      s += p;
      if (std::abs(p) < tol * std::max(1.0, std::abs(s))) break;
    }
    return s;
  }
  const double sign = kind == 4 ? -1.0 : 1.0;
  cplx p = 1.0;
  double sg = 1.0;
  for (int n = 1; n < 10000; ++n) {
    p *= std::pow(q, 2 * n - 1);  // q^{n²} from q^{(n−1)²}
    sg *= sign;
    s += 2.0 * sg * p;
    if (std::abs(p) < tol * std::max(1.0, std::abs(s))) break;
  }
  return s;
}

}  // namespace

ThetaValues big_thetas(cplx z, const EvalConfig& cfg) {
  require_upper(z);
  const auto t = detail::theta_triple<double, cplx>(z, cfg.abs_tol);
  return {t.t2, t.t3, t.t4};
}

cplx big_theta(int kind, cplx z, const EvalConfig& cfg) {
  const ThetaValues t = big_thetas(z, cfg);
  switch (kind) {
    case 2: return t.t2;
    case 3: return t.t3;
    case 4: return t.t4;
    default: throw DomainError("theta kind must be 2, 3 or 4");
  }
}

cplx theta(int kind, cplx q, const EvalConfig& cfg) {
  if (kind < 2 || kind > 4) throw DomainError("theta kind must be 2, 3 or 4");
  const double aq = std::abs(q);
  if (!(aq < 1.0)) throw DomainError("nome outside the unit disk");
  if (aq > cfg.max_nome) throw NumericalError("nome too close to the unit circle");
  if (aq == 0.0) return 1.0;
  if (aq <= 0.5) return theta_q_series(kind, q, cfg.abs_tol);
  const cplx z = std::log(q) / (I * pi);
  const cplx v = big_theta(kind, z, cfg);
  if (kind == 2) return v / (2.0 * std::exp(I * pi * z / 4.0));
  return v;
}

LambdaValues lambda_values(cplx z, const EvalConfig& cfg) {
  require_upper(z);
  const auto l = detail::lambda_triple<double, cplx>(z, cfg.abs_tol);
  return {l.lam, l.comp, l.dlam};
}

cplx lambda(cplx z, const EvalConfig& cfg) { return lambda_values(z, cfg).lam; }

cplx lambda_prime(cplx z, const EvalConfig& cfg) { return lambda_values(z, cfg).dlam; }

cplx hyp_half_power_series(cplx z) {
  cplx sum = 1.0, term = 1.0;
  for (int n = 1; n < 20000; ++n) {
    const double r = (2.0 * n - 1.0) / (2.0 * n);
    term *= r * r * z;
    sum += term;
    if (std::abs(term) * 4.0 < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cplx hyp_half_barnes(cplx w) {
  if (w == 0.0) throw DomainError("hypergeometric argument on the cut");
  cplx sum = 0.0, power = 1.0;
  double a = 1.0, h = 0.0;
  for (int n = 1; n < 20000; ++n) {
    const double r = (2.0 * n - 1.0) / (2.0 * n);
    a *= r * r;
    h += 1.0 / ((2.0 * n - 1.0) * n);
    power *= w;
    const cplx term = a * h * power;
    sum += term;
    if (std::abs(term) * 4.0 < 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return hyp_half_power_series(w) / pi * std::log(16.0 / w) - 2.0 / pi * sum;
}

cplx hyp_half_agm(cplx z) {
  cplx a = 1.0, b = std::sqrt(1.0 - z);
  for (int it = 0; it < 100; ++it) {
    const cplx a1 = 0.5 * (a + b);
    cplx b1 = std::sqrt(a * b);
    if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
    a = a1;
    b = b1;
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
  }
  return 1.0 / a;
}

cplx hyp_half(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("hypergeometric argument not finite");
  if (z.imag() == 0.0 && z.real() >= 1.0) throw DomainError("hypergeometric argument on the cut [1, inf)");
  const double r0 = hyp_switch_radius;
  if (std::abs(z) <= r0) return hyp_half_power_series(z);
  if (std::abs(1.0 - z) <= r0) return hyp_half_barnes(1.0 - z);
  const cplx w = z / (z - 1.0);
  const cplx pre = 1.0 / std::sqrt(1.0 - z);
  if (std::abs(w) <= r0) return pre * hyp_half_power_series(w);
  if (std::abs(1.0 - w) <= r0) return pre * hyp_half_barnes(1.0 - w);
  // Neighbourhoods of e^{±iπ/3} are reached by none of the series above.
  return hyp_half_agm(z);
}

cplx schwarz_tau(cplx z) {
  if (z.imag() == 0.0 && !(z.real() > 0.0 && z.real() < 1.0))
    throw DomainError("schwarz_tau argument on the real axis outside (0,1)");
  return I * hyp_half(1.0 - z) / hyp_half(z);
}

double delta_ratio(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("delta_ratio needs x > 0");
  return hyp_half(1.0 / (1.0 + x)).real() / hyp_half(x / (1.0 + x)).real();
}

}  // namespace hypf
