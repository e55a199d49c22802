#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <random>

#include "hypf/cfrac.hpp"

using namespace hypf;

namespace {

// 1/(2n_N − 1/(2n_{N−1} − … 1/(2n_1 − z))) evaluated from the inside out.
mpq_class nested(const std::vector<long>& entries, mpq_class z) {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) z = 1 / (2 * mpq_class(*it) - z);
  return z;
}

bool in_closed_disk_translate(cplx w) {
  const double m = std::round(w.real() / 2.0);
  for (double k : {m - 1, m, m + 1})
    if (std::abs(w - 2.0 * k) <= 1.0) return true;
  return false;
}

// z − shift = φ_word(w) with w in 𝔈⁰: |w| ≤ 1 and −1/w outside every 2m + closed disk.
bool cell_contains(const PartitionCell& c, cplx z) {
  if (c.kind == CellKind::E_INF) return !in_closed_disk_translate(z);
  const Mobius m = word_mobius(c.word);
  const double a = m.a.get_d(), b = m.b.get_d(), cc = m.c.get_d(), d = m.d.get_d();
  const cplx u = z - double(c.shift);
  const cplx w = (d * u - b) / (-cc * u + a);
  return std::abs(w) <= 1.0 + 1e-9 && !in_closed_disk_translate(-1.0 / w);
}

}  // namespace

TEST_CASE("even parts") {
  CHECK(even_parts(0.3).even_int == 0);
  CHECK(even_parts(0.3).frac == doctest::Approx(0.3));
  CHECK(even_parts(8.0 / 3).even_int == 2);
  CHECK(even_parts(8.0 / 3).frac == doctest::Approx(2.0 / 3));
  CHECK(even_parts(-5.0).even_int == -6);
  CHECK(even_parts(-5.0).frac == 1.0);
  CHECK(even_parts(1.0).even_int == 2);
  CHECK(even_parts(3.0).even_int == 4);
  CHECK(even_parts(-1.0).even_int == -2);
  CHECK(even_parts(-0.999).even_int == 0);
  CHECK(even_int_exact(mpq_class(8, 3)) == 2);
  CHECK(even_int_exact(mpq_class(-5)) == -6);
}

TEST_CASE("word evaluation and convergents") {
  CHECK(phi_apply(CFWord{{1}}, mpq_class(0)) == mpq_class(1, 2));
  CHECK(phi_apply(CFWord{{1, -1, -1}}, mpq_class(0)) == mpq_class(3, 8));
  CHECK(phi_apply(CFWord{}, mpq_class(1, 3)) == mpq_class(1, 3));
  const ConvergentPair cv = convergents(CFWord{{1, -1, -1}});
  CHECK(cv.length() == 3);
  CHECK(cv.p_at(2) * cv.q_at(3) - cv.p_at(3) * cv.q_at(2) == 1);
  CHECK(cv.p_at(0) == 0);
  CHECK(cv.p_at(-1) == 1);
  CHECK(cv.q_at(0) == 1);
  CHECK(cv.q_at(-1) == 0);
  const cplx w(0.2, 0.5);
  CHECK(std::abs(phi_apply(CFWord{{3, -2}}, w) - 1.0 / (6.0 - 1.0 / (-4.0 - w))) < 1e-15);
}

TEST_CASE("convergent inequalities on 10^4 random words") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 12), mag(1, 9), sgn(0, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    CFWord w;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) w.entries.push_back(sgn(rng) ? mag(rng) : -mag(rng));
    const ConvergentPair cv = convergents(w);
    bool ok = true;
    for (int k = 0; k <= L; ++k) ok = ok && cv.p_at(k - 1) * cv.q_at(k) - cv.p_at(k) * cv.q_at(k - 1) == 1;
    for (int k = 1; k <= L; ++k)
      ok = ok && abs(cv.q_at(k)) > abs(cv.p_at(k)) && abs(cv.q_at(k)) > abs(cv.q_at(k - 1)) &&
           abs(cv.p_at(k)) > abs(cv.p_at(k - 1));
    // Möbius form and nested evaluation agree.
    const Mobius m = word_mobius(w);
    ok = ok && m.a * m.d - m.b * m.c == 1 && phi_apply(w, mpq_class(0)) == nested(w.entries, 0);
    CHECK(ok);
  }
}

TEST_CASE("even rational decomposition") {
  CHECK(even_rational_decompose(3, 8).entries == std::vector<long>{1, -1, -1});
  CHECK(even_rational_decompose(1, 10).entries == std::vector<long>{5});
  CHECK(even_rational_decompose(-2, 3).entries == std::vector<long>{-1, -1});
  CHECK(gauss_map_real(mpq_class(-2, 3)) == mpq_class(-1, 2));
  int count = 0;
  for (long q = 1; q <= 80; ++q)
    for (long p = -q + 1; p < q; ++p) {
      if (p == 0 || (p * q) % 2 != 0 || std::gcd(p, q) != 1) continue;
      const CFWord w = even_rational_decompose(p, q);
      CHECK(nested(w.entries, 0) == mpq_class(p, q));
      ++count;
    }
  CHECK(count > 1000);
  CHECK_THROWS_AS(even_rational_decompose(1, 3), DomainError);
  CHECK_THROWS_AS(even_rational_decompose(3, 2), DomainError);
  CHECK_THROWS_AS(even_rational_decompose(2, 4), DomainError);
}

TEST_CASE("roof diameter bound for all words over {+-1,+-2,+-3} of length <= 5") {
  const std::vector<long> alphabet{1, -1, 2, -2, 3, -3};
  for (int L = 1; L <= 5; ++L) {
    std::vector<int> idx(L, 0);
    bool ok = true;
    while (true) {
      CFWord w;
      for (int i : idx) w.entries.push_back(alphabet[i]);
      const ConvergentPair cv = convergents(w);
      const mpq_class d = roof_diameter(w);
      ok = ok && d <= mpq_class(1, L);
      ok = ok && d == 1 / mpq_class(abs(cv.p_at(L)) * (abs(cv.q_at(L)) - abs(cv.p_at(L))));
      int k = 0;
      while (k < L && ++idx[k] == 6) idx[k++] = 0;
      if (k == L) break;
    }
    CHECK(ok);
  }
}

TEST_CASE("complex even Gauss map") {
  const GaussStep s = gauss_map_h(cplx(0.0, 2.0));
  CHECK(std::abs(s.value - cplx(0.0, 0.5)) < 1e-16);
  CHECK(s.j == 0);
  const cplx z(0.4, 0.1);
  const double y = z.imag();
  CHECK(gauss_map_h(z).value.imag() >= y / (0.5 + std::sqrt(0.25 - y * y)));
  const cplx w(0.2, 0.5);
  const GaussStep back = gauss_map_h(phi_apply(CFWord{{3}}, w));
  CHECK(std::abs(back.value - w) < 1e-14);
  CHECK(back.j == 3);
  // Im G₂(z) ≥ Im z on 𝔻 ∩ ℍ.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0), v(0.001, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const cplx p(u(rng), v(rng));
    if (std::abs(p) >= 1.0) continue;
    CHECK(gauss_map_h(p).value.imag() >= p.imag());
  }
  CHECK_THROWS_AS(gauss_map_h(cplx(1.5, 0.2)), DomainError);
}

TEST_CASE("classification examples") {
  const PartitionCell a = classify_point(cplx(0.1, 3.0));
  CHECK(a.kind == CellKind::E_INF);
  CHECK(a.height == 0);
  const PartitionCell b = classify_point(cplx(0.45, 0.6));
  CHECK(b.kind == CellKind::E_WORD);
  CHECK(b.height == 1);
  CHECK(b.height == 1 + b.word.length());
  const PartitionCell c = classify_point(phi_apply(CFWord{{1, -1}}, cplx(0.1, 0.6)));
  CHECK(c.word.entries == std::vector<long>{1, -1});
  CHECK(c.height == 3);
  const PartitionCell d = classify_point(cplx(4.3, 0.2));
  CHECK(d.shift == 4);
  CHECK_THROWS_AS(classify_point(cplx(0.2, -1.0)), DomainError);
  CHECK_THROWS_AS(classify_point(std::exp(I * 1.0)), BoundaryAmbiguous);
  CHECK_NOTHROW(classify_point(std::exp(I * 1.0), {1e-9, true}));
}

// Under h_E = 1 + length(word), a point of 𝔈⁰ has the identity word.
TEST_CASE("classify(0.45+0.6i) has word length 1" * doctest::should_fail()) {
  CHECK(classify_point(cplx(0.45, 0.6)).word.length() == 1);
}

TEST_CASE("partition consistency on 10^3 random points") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> re(-3.0, 3.0), lg(-4.0, 0.5);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const cplx z(re(rng), std::pow(10.0, lg(rng)));
    PartitionCell c;
    try {
      c = classify_point(z);
    } catch (const BoundaryAmbiguous&) {
      continue;
    }
    CHECK(cell_contains(c, z));
    CHECK(c.height == (c.kind == CellKind::E_INF ? 0 : 1 + c.word.length()));
    ++checked;
  }
  CHECK(checked > 990);
}
