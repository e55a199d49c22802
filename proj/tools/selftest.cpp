#include "selftest.hpp"

#include <gmpxx.h>

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "hypf/biortho.hpp"
#include "hypf/cfrac.hpp"
#include "hypf/faber.hpp"
#include "hypf/genfun.hpp"
#include "hypf/hfs.hpp"
#include "hypf/kleingordon.hpp"
#include "hypf/modular.hpp"
#include "hypf/transfer.hpp"

namespace hypf::selftest {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

// measured ≤ limit
void bound(Check& c, const std::string& label, double measured, double limit) {
  const bool ok = measured <= limit;
  c.pass = c.pass && ok;
  c.details.push_back((ok ? "ok    " : "FAIL  ") + label + ": " + sci(measured) + " (limit " +
                      sci(limit) + ")");
}

void truth(Check& c, const std::string& label, bool ok, const std::string& note = "") {
  c.pass = c.pass && ok;
  c.details.push_back((ok ? "ok    " : "FAIL  ") + label + (note.empty() ? "" : ": " + note));
}

Check timed(int id, const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  c.id = id;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    truth(c, "exception", false, e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

// 1. modular identities
void modular_identities(Check& c) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.05, 5.0);
  double jac = 0.0, landen = 0.0;
  for (int i = 0; i < 200; ++i) {
    const cplx z(re(rng), im(rng));
    const ThetaValues t = big_thetas(z), t2 = big_thetas(2.0 * z);
    const cplx a2 = t.t2 * t.t2, a3 = t.t3 * t.t3, a4 = t.t4 * t.t4;
    const double scale = std::norm(t.t3);
    jac = std::max(jac, std::abs(a3 * a3 - a2 * a2 - a4 * a4) / (scale * scale));
    landen = std::max(landen, std::abs(2.0 * t2.t2 * t2.t2 - (a3 - a4)) / scale);
    landen = std::max(landen, std::abs(2.0 * t2.t3 * t2.t3 - (a3 + a4)) / scale);
    landen = std::max(landen, std::abs(t2.t4 * t2.t4 - t.t3 * t.t4) / scale);
  }
  bound(c, "Jacobi relative residual, 200 points", jac, 1e-10);
  bound(c, "Landen relative residual, 200 points", landen, 1e-10);
  bound(c, "|lambda(i) - 1/2|", std::abs(lambda(cplx(0, 1)) - 0.5), 1e-12);
  bound(c, "|lambda(2i) - (17 - 12 sqrt 2)|",
        std::abs(lambda(cplx(0, 2)) - (17.0 - 12.0 * std::sqrt(2.0))), 1e-12);
  const cplx t3 = theta(3, std::exp(-pi / 2));
  const double t34 = std::norm(t3 * t3);
  bound(c, "|theta3(e^{-pi/2})^4 - 4.0600937869433563|", std::fabs(t34 - 4.0600937869433563), 1e-12);
  const double closed = pi / std::pow(std::tgamma(0.75), 4) * std::pow(1.0 + std::sqrt(2.0), 2) / 2.0;
  c.details.push_back("info  theta3(e^{-pi/2})^4 = " + [&] {
    std::ostringstream os;
    os << std::setprecision(17) << t34 << " vs closed form pi(1+sqrt2)^2/(2 Gamma(3/4)^4) = " << closed;
    return os.str();
  }());
}

// 2. exact triangle polynomials
void triangle_polynomials(Check& c) {
  const SchwarzFamily& fam = SchwarzFamily::shared();
  bool lead = true, sub = true, at_one = true, sym = true;
  for (int n = 1; n <= 24; ++n) {
    const RationalPoly& s = fam.poly(n);
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, n);
    lead = lead && s.coeffs[n] == mpq_class(p16);
    if (n >= 2) sub = sub && s.coeffs[n - 1] == mpq_class(-8 * n * (p16 / 16));
    const mpq_class one = s(mpq_class(1));
    at_one = at_one && one == mpq_class(static_cast<long>((n % 2 == 1 ? 2 : 0) * r4(n)));
    // (−1)ⁿS(z) = S(1 − z) − S(1), coefficientwise.
    std::vector<mpq_class> shifted(n + 1, mpq_class(0));
    for (int k = 1; k <= n; ++k) {
      mpz_class binom = 1;
      for (int j = 0; j <= k; ++j) {
        if (j > 0) binom = binom * (k - j + 1) / j;
        shifted[j] += s.coeffs[k] * mpq_class(binom) * ((j % 2 == 0) ? 1 : -1);
      }
    }
    shifted[0] -= one;
    for (int j = 0; j <= n; ++j) {
      const mpq_class lhs = (n % 2 == 0 ? 1 : -1) * s.coeffs[j];
      sym = sym && lhs == shifted[j];
    }
  }
  truth(c, "s_{n,n} = 16^n, n <= 24", lead);
  truth(c, "s_{n,n-1} = -8n 16^{n-1}, 2 <= n <= 24", sub);
  truth(c, "S_n(1) = (1 - (-1)^n) r4(n), n <= 24", at_one);
  truth(c, "(-1)^n S_n(z) = S_n(1-z) - S_n(1) exactly, n <= 24", sym);
  const int order = 16;
  IntSeries t2 = series_pow(theta2_series(order), 4, order);
  for (auto& v : t2) v *= 16;
  IntSeries low = series_mul(series_mul(t2, series_pow(theta3_series(order, -1), 4, order), order),
                             series_inverse(series_pow(theta3_series(order, 1), 4, order), order),
                             order);
  bool gen = true, lowest = true;
  for (int n = 1; n <= order; ++n) {
    gen = gen && fam.poly(n)(mpq_class(1)) == mpq_class(t2[n - 1]);
    lowest = lowest && fam.poly(n).coeffs[1] == mpq_class(low[n - 1]);
  }
  truth(c, "sum S_n(1) u^{n-1} = 16 theta2(u)^4 to order 16", gen);
  truth(c, "sum s_{n,1} u^{n-1} = 16 theta2^4 theta3(-u)^4 / theta3(u)^4 to order 16", lowest);
}

// 3. biorthogonality
void biorthogonality(Check& c) {
  double h_dev = 0.0, m_dev = 0.0;
  for (int n = -4; n <= 4; ++n) {
    for (int m = -4; m <= 4; ++m) {
      const Family fam = n == 0 ? Family::H0 : Family::H;
      const cplx v = biortho_pairing(m, fam, n).value;
      h_dev = std::max(h_dev, std::abs(v - (m == n ? 1.0 : 0.0)));
      if (n != 0) m_dev = std::max(m_dev, std::abs(biortho_pairing(m, Family::M, n).value));
    }
  }
  bound(c, "max |int H_n e^{-i pi m x} - delta_mn|, n,m in -4..4", h_dev, 1e-5);
  bound(c, "max |int M_n e^{-i pi m x}|, n in -4..4 \\ 0, m in -4..4", m_dev, 1e-5);
  c.details.push_back(
      "info  int M_n e^{i pi m/x} dx equals int H_n e^{-i pi m u} du under x = -1/u, so the M "
      "rows of the delta matrix coincide with the H rows");
  const std::vector<double> xs = linspace(-0.95, 0.95, 16);
  double per = 0.0;
  for (const auto& e : periodize_batch(Family::H0, 0, xs)) per = std::max(per, std::abs(e.value - 0.5));
  for (int n : {1, 2, 3, 4, -2}) {
    const auto h = periodize_batch(Family::H, n, xs);
    const auto m = periodize_batch(Family::M, n, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      per = std::max(per, std::abs(2.0 * h[i].value - std::exp(cplx(0, pi * n * xs[i]))));
      per = std::max(per, std::abs(m[i].value));
    }
  }
  bound(c, "periodization identities at 16 points (H0, H_n, M_n, n in {1,2,3,4,-2})", per, 1e-5);
}

// 4. envelopes
void envelopes(Check& c) {
  const std::vector<double> xs = linspace(-20.0, 20.0, 200);
  const BiorthoEvaluator& ev = default_evaluator();
  double worst0 = 0.0, worst = 0.0;
  const auto h0s = ev.eval(Family::H0, 0, xs);
  for (std::size_t i = 0; i < xs.size(); ++i)
    worst0 = std::max(worst0, std::abs(h0s[i].value) * (1 + xs[i] * xs[i]) / 3.0);
  for (int n = 1; n <= 4; ++n) {
    const double cn = std::pow(pi, 6) * n * n / 2.0;
    for (Family f : {Family::H, Family::M}) {
      for (int sn : {n, -n}) {
        const auto v = ev.eval(f, sn, xs);
        for (std::size_t i = 0; i < xs.size(); ++i)
          worst = std::max(worst, std::abs(v[i].value) * (1 + xs[i] * xs[i]) / cn);
      }
    }
  }
  bound(c, "max |H0|(1+x^2)/3 on 200 points in [-20,20]", worst0, 1.0);
  bound(c, "max |H_n|,|M_n| (1+x^2)/(pi^6 n^2/2), |n| <= 4", worst, 1.0);
}

// 5. generating functions and continuation
void generating(Check& c) {
  BiorthoConfig qc;
  qc.precision = Precision::QUAD;
  const BiorthoEvaluator quad(qc);
  const int N = 24;
  double gen = 0.0;
  for (cplx y : {cplx(0.3, 1.2), cplx(-0.2, 2.0)}) {
    for (double x : {0.0, 0.7, -2.3}) {
      for (int delta : {0, 1}) {
        cplx s = 0.0;
        for (int n = 1; n <= N; ++n) {
          const Family f = delta == 0 ? Family::H : Family::M;
          s += double(n) * quad.eval(f, n, {x})[0].value * std::exp(I * pi * double(n) * y);
        }
        const cplx phi = phi_inf(delta, x, y).value;
        gen = std::max(gen, std::abs(s - phi / (2 * pi * pi)));
      }
    }
  }
  bound(c, "generating identity, 6 (x,y) points, delta in {0,1}", gen, 1e-6);

  const std::vector<cplx> zs = {{0.1, 1.3},  {-0.6, 1.1}, {0.9, 0.6},  {-0.95, 0.5}, {0.0, 2.5},
                                {0.5, 0.95}, {-0.3, 1.6}, {0.75, 0.8}, {-0.8, 0.75}, {0.2, 1.05}};
  double cont = 0.0;
  for (const cplx& z : zs) {
    if (classify_point(z).kind != CellKind::E_INF) throw NumericalError("test point not in E_inf");
    for (int delta : {0, 1})
      cont = std::max(cont, std::abs(phi_strip(delta, 0.4, z).value - phi_inf(delta, 0.4, z).value));
  }
  bound(c, "|Phi_strip - Phi_inf| on 10 points of E_inf", cont, 1e-8);

  ClassifyConfig lenient;
  lenient.lenient = true;
  double strip = 0.0;
  for (double re : linspace(-0.95, 0.95, 20)) {
    for (double im : linspace(0.1, 2.0, 20)) {
      const cplx z(re, im);
      const double b = im <= 1.0 ? 20 * pi * pi / (im * im * im) : 20 * pi * pi / (im * im);
      for (int delta : {0, 1})
        strip = std::max(strip, std::abs(phi_strip(delta, 0.5, z, {}, lenient).value) / b);
    }
  }
  bound(c, "strip bound |Phi_strip|/(20 pi^2/Im^k) on a 20x20 grid", strip, 1.0);

  const BiorthoEvaluator& ev = default_evaluator();
  const std::vector<double> xs = {-0.8, 0.3, 1.1, 2.5};
  double paths = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto d = ev.direct(Family::H, n, xs, Precision::DOUBLE);
    const auto l = ev.low_contour(Family::H, n, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) paths = std::max(paths, std::abs(d[i].value - l[i].value));
  }
  bound(c, "DIRECT vs LOW_CONTOUR H_n, n = 1..4", paths, 1e-5);
}

// 6. continued fractions
bool in_unit_disk(cplx w) { return std::abs(w) < 1.0; }

bool outside_shifted_disks(cplx w) {
  const double m = std::floor(w.real() / 2.0);
  for (double k : {2 * m - 2, 2 * m, 2 * m + 2, 2 * m + 4})
    if (std::abs(w - k) <= 1.0) return false;
  return true;
}

void continued_fractions(Check& c) {
  long count = 0;
  bool round = true;
  for (long q = 1; q <= 200; ++q) {
    for (long p = -(q - 1); p <= q - 1; ++p) {
      if (p == 0 || std::gcd(p, q) != 1 || (p * q) % 2 != 0) continue;
      const CFWord w = even_rational_decompose(p, q);
      round = round && phi_apply(w, mpq_class(0)) == mpq_class(p, q);
      ++count;
    }
  }
  truth(c, "decompose/evaluate roundtrip on all " + std::to_string(count) + " even rationals, |q| <= 200",
        round);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 12), ent(-6, 6);
  bool conv = true;
  for (int i = 0; i < 10000; ++i) {
    CFWord w;
    const int L = len(rng);
    while (w.length() < L) {
      const int e = ent(rng);
      if (e != 0) w.entries.push_back(e);
    }
    const ConvergentPair cp = convergents(w);
    for (int k = 0; k <= L; ++k) {
      conv = conv && cp.p_at(k - 1) * cp.q_at(k) - cp.p_at(k) * cp.q_at(k - 1) == 1;
      if (k >= 1) {
        conv = conv && abs(cp.q_at(k)) > abs(cp.p_at(k)) && abs(cp.q_at(k)) > abs(cp.q_at(k - 1)) &&
               abs(cp.p_at(k)) > abs(cp.p_at(k - 1));
      }
    }
  }
  truth(c, "convergent determinant and monotonicity on 10^4 random words", conv);

  // All words over {±1, ±2} up to length 8; larger entries only shrink the roof.
  bool roof = true;
  long words = 0;
  const std::vector<long> alphabet = {-2, -1, 1, 2};
  for (int L = 1; L <= 8; ++L) {
    std::vector<int> idx(L, 0);
    for (;;) {
      CFWord w;
      for (int i : idx) w.entries.push_back(alphabet[i]);
      roof = roof && roof_diameter(w) <= mpq_class(1, L);
      ++words;
      int k = 0;
      while (k < L && ++idx[k] == 4) idx[k++] = 0;
      if (k == L) break;
    }
  }
  truth(c, "roof diameter <= 1/N exactly on " + std::to_string(words) + " words, N <= 8", roof);

  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.02, 1.5);
  int agree = 0, ambiguous = 0;
  for (int i = 0; i < 1000; ++i) {
    const cplx z(re(rng), im(rng));
    PartitionCell cell;
    try {
      cell = classify_point(z);
    } catch (const BoundaryAmbiguous&) {
      ++ambiguous;
      continue;
    }
    const cplx w0 = z - double(cell.shift);
    bool ok = std::fabs(w0.real()) <= 1.0;
    if (cell.kind == CellKind::E_INF) {
      ok = ok && !in_unit_disk(w0) && cell.height == 0;
    } else {
      // Inverse of the word's Möbius map, from exact integers.
      const Mobius mb = word_mobius(cell.word);
      const cplx a(mb.a.get_d()), b(mb.b.get_d()), cc(mb.c.get_d()), d(mb.d.get_d());
      const cplx w = (d * w0 - b) / (-cc * w0 + a);
      ok = ok && in_unit_disk(w) && outside_shifted_disks(-1.0 / w) &&
           cell.height == 1 + cell.word.length();
    }
    agree += ok ? 1 : 0;
  }
  truth(c, "classification agrees with the Mobius membership oracle",
        agree + ambiguous == 1000,
        std::to_string(agree) + " agree, " + std::to_string(ambiguous) + " boundary-ambiguous of 1000");
}

// 7. Klein–Gordon
void klein_gordon(Check& c) {
  double delta = 0.0;
  for (int m = 0; m <= 4; ++m) {
    const auto a = r_interp_all(4, pi * m, 0.0);
    const auto b = r_interp_all(4, 0.0, -pi * m);
    for (int n = 0; n <= 4; ++n) {
      delta = std::max(delta, std::abs(a[n].value - (n == m ? 1.0 : 0.0)));
      delta = std::max(delta, std::abs(b[n].value - (n == 0 && m == 0 ? 1.0 : 0.0)));
    }
  }
  bound(c, "interpolation deltas R_n(pi m,0), R_n(0,-pi m), n,m <= 4", delta, 1e-6);

  const TestFunction bump = gaussian_bump(1.0, 0.1);
  const KGSamples s = samples_from(bump, 16);
  double rec = 0.0, certified = 0.0;
  for (double x : linspace(0.0, 2.0, 5)) {
    for (double y : linspace(0.0, -2.0, 5)) {
      const Estimate r = kg_reconstruct(s, x, y);
      rec = std::max(rec, std::abs(r.value - u_phi(bump, x, y).value));
      certified = std::max(certified, r.error);
    }
  }
  bound(c, "reconstruction of U_bump on a 5x5 grid, N = 16, vs direct quadrature", rec, 1e-3);
  c.details.push_back("info  certified tail bound from pi^7 n^2/2 envelopes: " + sci(certified));

  const auto U = [&bump](double x, double y) { return u_phi(bump, x, y).value; };
  double res = 0.0;
  for (auto [a, b, cc, d] : {std::array<double, 4>{0, 1, -1, 0}, std::array<double, 4>{0.5, 2, 0.2, 1.3},
                             std::array<double, 4>{-1.5, -0.5, -2, -1}})
    res = std::max(res, std::abs(kg_residual(U, a, b, cc, d).value));
  bound(c, "PDE residual of U_bump on three rectangles", res, 1e-6);

  double r0 = 0.0, rn = 0.0;
  for (double s10 : {0.01, 0.1, 1.0, 10.0, 30.0}) {
    for (auto [x, y] : {std::pair{s10, 0.0}, std::pair{0.0, s10}, std::pair{s10, s10}}) {
      const auto r = r_interp_all(4, x, -y);
      r0 = std::max(r0, std::abs(r[0].value) / r0_envelope(x, y));
      for (int n = 1; n <= 4; ++n) rn = std::max(rn, std::abs(r[n].value) / rn_envelope(n, x, y));
    }
  }
  bound(c, "max |R0(x,-y)| / 5K0(sqrt(2 pi (x+y+1))) on a log grid", r0, 1.0);
  bound(c, "max |R_n(x,-y)| / (2 pi^3 e^{2 pi n} ... K1(...)), n <= 4, log grid", rn, 1.0);
  c.details.push_back("info  R0(0,0) = " + sci(r_interp(0, 0, 0).value.real()) +
                      " while 5K0(sqrt(2 pi)) = " + sci(r0_envelope(0, 0)));
}

// 8. transfer operator
void transfer(Check& c) {
  double mass = 0.0;
  for (int N = 1; N <= 3; ++N) mass = std::max(mass, std::abs(grid_integral(transfer_iterate(N)) - 2.0));
  bound(c, "|int T1^N[1] - 2|, N <= 3", mass, 1e-4);
  bound(c, "|T1[1](0) - pi^2/12|", std::abs(transfer_iterate(1).value_at_zero - pi * pi / 12), 1e-8);
  bound(c, "max |(I + T1)[2 H0] - 1| on the grid", fixed_relation_residual(0).plus, 1e-5);
  const double limit = pi * pi / 4 - 1;
  bound(c, "contraction ratio N = 2", contraction_check(2), limit);
  bound(c, "contraction ratio N = 3", contraction_check(3), limit);
}

// 9. conjugate series
void conjugate(Check& c) {
  const TestFunction bump = smooth_bump(1.0, 2.0);
  const std::vector<double> xs = linspace(1.05, 1.95, 10);
  std::vector<double> errs;
  for (int N : {4, 8, 12}) {
    const HFSCoeffs co = conj_analyze(bump, N, 1e-6);
    const auto v = conj_synthesize_batch(co, xs);
    double w = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) w = std::max(w, std::abs(v[i].value - bump(xs[i])));
    errs.push_back(w);
  }
  truth(c, "bump round-trip error decreasing over N = 4, 8, 12",
        errs[1] < errs[0] && errs[2] < errs[1],
        sci(errs[0]) + " > " + sci(errs[1]) + " > " + sci(errs[2]));

  double poisson = 0.0;
  for (auto [z, t] : {std::pair{cplx(0.3, 1.5), 0.2}, std::pair{cplx(-0.5, 1.2), 0.7},
                      std::pair{cplx(0.1, 2.0), -1.3}}) {
    const double P = z.imag() / (pi * ((t - z.real()) * (t - z.real()) + z.imag() * z.imag()));
    poisson = std::max(poisson, std::abs(conj_synthesize(poisson_coefficients(z, 16), t).value - P));
  }
  bound(c, "Poisson kernel expansion at three (z, t), N = 16", poisson, 1e-4);

  // U_φ by adaptive Gauss–Kronrod on the support, independent of the panel rule.
  const HFSCoeffs co = conj_analyze(bump, 4, 1e-8);
  double cross = 0.0;
  for (int n = -4; n <= 4; ++n) {
    auto gk = [&](const std::function<cplx(double)>& g) {
      using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
      const double r = GK::integrate([&](double t) { return g(t).real(); }, 1.0, 2.0, 15, 1e-13);
      const double i = GK::integrate([&](double t) { return g(t).imag(); }, 1.0, 2.0, 15, 1e-13);
      return cplx(r, i);
    };
    const cplx h = gk([&](double t) { return bump(t) * std::exp(cplx(0, -pi * n * t)); });
    cross = std::max(cross, std::abs(co.h.at(n) - h));
    if (n != 0) {
      const cplx m = gk([&](double t) { return bump(t) * std::exp(cplx(0, pi * n / t)); });
      cross = std::max(cross, std::abs(co.m.at(n) - m));
    }
  }
  bound(c, "h*_n = U(-pi n, 0), m*_n = U(0, pi n) vs adaptive quadrature, |n| <= 4", cross, 1e-6);
}

}  // namespace

std::vector<Check> run_acceptance(int only, std::ostream* progress) {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> all = {
      {"modular identities", modular_identities},
      {"triangle polynomials exact", triangle_polynomials},
      {"biorthogonality", biorthogonality},
      {"envelopes", envelopes},
      {"generating functions and continuation", generating},
      {"continued fractions", continued_fractions},
      {"Klein-Gordon interpolation", klein_gordon},
      {"transfer operator", transfer},
      {"conjugate series", conjugate}};
  std::vector<Check> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    out.push_back(timed(id, all[i].first, all[i].second));
    if (progress) print_report({out.back()}, *progress, true);
  }
  return out;
}

std::vector<Check> run_quick() {
  std::vector<Check> out;
  out.push_back(timed(1, "lambda special values", [](Check& c) {
    bound(c, "|lambda(i) - 1/2|", std::abs(lambda(cplx(0, 1)) - 0.5), 1e-12);
    bound(c, "|tau(1/2) - i|", std::abs(schwarz_tau(cplx(0.5, 0)) - I), 1e-12);
  }));
  out.push_back(timed(2, "Schwarz polynomials", [](Check& c) {
    const RationalPoly& s = SchwarzFamily::shared().poly(2);
    truth(c, "S_2 = 256z^2 - 256z", s.coeffs[2] == 256 && s.coeffs[1] == -256);
    truth(c, "S_5(1) = 96", SchwarzFamily::shared().poly(5)(mpq_class(1)) == 96);
  }));
  out.push_back(timed(3, "continued fractions", [](Check& c) {
    truth(c, "decompose(3/8) = (1,-1,-1)", even_rational_decompose(3, 8).entries == std::vector<long>{1, -1, -1});
    truth(c, "classify(0.1+3i) is E_inf", classify_point(cplx(0.1, 3)).kind == CellKind::E_INF);
  }));
  out.push_back(timed(4, "biorthogonal system", [](Check& c) {
    bound(c, "|H_1(0) - 8/pi^2|", std::abs(hn(1, 0.0).value - 8 / (pi * pi)), 1e-10);
    bound(c, "|2 sum H0(0.3+2k) - 1|", std::abs(2.0 * periodize(Family::H0, 0, 0.3).value - 1.0), 1e-5);
  }));
  out.push_back(timed(5, "Klein-Gordon and transfer", [](Check& c) {
    bound(c, "|R_2(2 pi, 0) - 1|", std::abs(r_interp(2, 2 * pi, 0).value - 1.0), 1e-6);
    bound(c, "|T1[1](0) - pi^2/12|", std::abs(transfer_iterate(1).value_at_zero - pi * pi / 12), 1e-8);
  }));
  return out;
}

void print_report(const std::vector<Check>& checks, std::ostream& out, bool verbose) {
  for (const Check& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << std::fixed
        << std::setprecision(1) << c.seconds << " s)\n";
    out.unsetf(std::ios::floatfield);
    if (verbose)
      for (const std::string& d : c.details) out << "        " << d << "\n";
  }
}

}  // namespace hypf::selftest
