#include "hypf/cfrac.hpp"

#include <cmath>
#include <sstream>

namespace hypf {

int CFWord::sigma() const {
  if (entries.empty()) return 0;
  return entries.back() > 0 ? 1 : -1;
}

std::string CFWord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

ConvergentPair convergents(const CFWord& word) {
  const int n = word.length();
  ConvergentPair c;
  c.p.assign(n + 2, 0);
  c.q.assign(n + 2, 0);
  c.p[0] = 1;  // p_{−1}
  c.q[0] = 0;  // q_{−1}
  c.p[1] = 0;  // p_0
  c.q[1] = 1;  // q_0
  for (int k = 1; k <= n; ++k) {
    const long nk = word.entries[n - k];
    if (nk == 0) throw DomainError("word entries must be nonzero");
    c.p[k + 1] = 2 * nk * c.p[k] - c.p[k - 1];
    c.q[k + 1] = 2 * nk * c.q[k] - c.q[k - 1];
  }
  return c;
}

EvenParts even_parts(double x) {
  if (!std::isfinite(x)) throw DomainError("even_parts needs a finite argument");
  const double m = 2.0 * std::floor((1.0 + std::fabs(x)) / 2.0);
  const long long e = static_cast<long long>(x < 0 ? -m : m);
  return {e, x - static_cast<double>(e)};
}

mpz_class even_int_exact(const mpq_class& x) {
  mpq_class ax = abs(x);
  mpq_class h = (ax + 1) / 2;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  mpz_class e = 2 * fl;
  return sgn(x) < 0 ? mpz_class(-e) : e;
}

Mobius word_mobius(const CFWord& word) {
  const ConvergentPair c = convergents(word);
  const int n = word.length();
  return {c.p_at(n - 1), c.q_at(n - 1), c.p_at(n), c.q_at(n)};
}

mpq_class phi_apply(const CFWord& word, const mpq_class& z) {
  const Mobius m = word_mobius(word);
  const mpq_class den = z * m.c + m.d;
  if (den == 0) throw DomainError("phi_apply: pole of the word map");
  mpq_class r = (z * m.a + m.b) / den;
  r.canonicalize();
  return r;
}

cplx phi_apply(const CFWord& word, cplx z) {
  // Nested evaluation keeps the rounding local at each step.
  for (auto it = word.entries.rbegin(); it != word.entries.rend(); ++it) z = 1.0 / (2.0 * static_cast<double>(*it) - z);
  return z;
}

mpq_class gauss_map_real(const mpq_class& x) {
  if (x == 0) throw DomainError("gauss map undefined at 0");
  mpq_class w = -1 / x;
  w.canonicalize();
  return w - mpq_class(even_int_exact(w));
}

CFWord even_rational_decompose(const mpz_class& p, const mpz_class& q) {
  if (q == 0 || p == 0) throw DomainError("need a nonzero even rational in (-1,1)");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw DomainError("p and q must be coprime");
  if ((p * q) % 2 != 0) throw DomainError("p*q must be even");
  mpq_class x(p, q);
  x.canonicalize();
  if (abs(x) >= 1) throw DomainError("p/q must lie in (-1,1)");
  CFWord word;
  const std::size_t cap = 64 * mpz_sizeinbase(q.get_mpz_t(), 2) + 64;
  for (std::size_t step = 0; x != 0; ++step) {
    if (step > cap) throw NumericalError("even continued fraction did not terminate");
    mpq_class inv = 1 / x;
    inv.canonicalize();
    const mpz_class e = even_int_exact(inv);
    word.entries.push_back(mpz_class(e / 2).get_si());
    x = mpq_class(e) - inv;
    x.canonicalize();
  }
  return word;
}

mpq_class roof_diameter(const CFWord& word) {
  if (word.empty()) throw DomainError("roof diameter needs a nonempty word");
  const ConvergentPair c = convergents(word);
  const int n = word.length();
  const mpz_class ap = abs(c.p_at(n)), aq = abs(c.q_at(n));
  mpq_class r(1, ap * (aq - ap));
  r.canonicalize();
  return r;
}

GaussStep gauss_map_h(cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("gauss_map_h needs Im z > 0");
  if (std::fabs(z.real()) > 1.0 + 1e-12) throw DomainError("gauss_map_h needs |Re z| <= 1");
  const cplx w = -1.0 / z;
  const long long e = even_parts(w.real()).even_int;
  return {w - static_cast<double>(e), static_cast<long>(-e / 2)};
}

std::string kind_name(CellKind kind) { return kind == CellKind::E_INF ? "E_INF" : "E_WORD"; }

PartitionCell classify_point(cplx z, const ClassifyConfig& cfg) {
  if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("classify_point needs Im z > 0");
  PartitionCell cell;
  cell.shift = even_parts(z.real()).even_int;
  cplx w = z - static_cast<double>(cell.shift);
  cell.orbit.push_back(w);
  const double eps = cfg.boundary_eps;
  const double r0 = std::abs(w);
  if (!cfg.lenient && std::fabs(r0 - 1.0) <= eps)
    throw BoundaryAmbiguous("point lies on the unit arc within boundary_eps");
  if (r0 >= 1.0) {
    cell.kind = CellKind::E_INF;
    cell.height = 0;
    return cell;
  }
  cell.kind = CellKind::E_WORD;
  const long long cap = 1 + static_cast<long long>(std::ceil(1.0 / (2.0 * z.imag())));
  for (long long step = 0; step <= cap; ++step) {
    const GaussStep g = gauss_map_h(w);
    const double r = std::abs(g.value);
    if (!cfg.lenient && std::fabs(r - 1.0) <= eps)
      throw BoundaryAmbiguous("point lies on a cell roof within boundary_eps");
    if (r >= 1.0) {
      cell.height = 1 + cell.word.length();
      return cell;
    }
    cell.word.entries.push_back(g.j);
    w = g.value;
    cell.orbit.push_back(w);
  }
  throw NumericalError("classification exceeded the height bound");
}

}  // namespace hypf
