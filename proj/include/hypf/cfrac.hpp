#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hypf/types.hpp"

namespace hypf {

// Word (n_N, …, n_1) of the map φ = φ_{n_N} ∘ … ∘ φ_{n_1}, φ_n(z) = 1/(2n − z).
// entries[0] is the outermost n_N. The empty word is the identity.
struct CFWord {
  std::vector<long> entries;

  bool empty() const { return entries.empty(); }
  int length() const { return static_cast<int>(entries.size()); }
  int sigma() const;  // sign of the innermost entry n_1
  std::string to_string() const;
  bool operator==(const CFWord&) const = default;
};

// p_k, q_k for k = −1..N stored at index k + 1.
struct ConvergentPair {
  std::vector<mpz_class> p, q;

  const mpz_class& p_at(int k) const { return p[k + 1]; }
  const mpz_class& q_at(int k) const { return q[k + 1]; }
  int length() const { return static_cast<int>(p.size()) - 2; }
};

ConvergentPair convergents(const CFWord& word);

struct EvenParts {
  long long even_int;
  double frac;
};

// ⌉x⌈₂ = 2⌊(1 + |x|)/2⌋·sign(x): (−1,1) ↦ 0, [2m−1, 2m+1) ↦ 2m, (−2m−1, −2m+1] ↦ −2m.
EvenParts even_parts(double x);
mpz_class even_int_exact(const mpq_class& x);

mpq_class phi_apply(const CFWord& word, const mpq_class& z);
cplx phi_apply(const CFWord& word, cplx z);

// Möbius coefficients of φ_word(z) = (a z + b)/(c z + d), ad − bc = 1.
struct Mobius {
  mpz_class a, b, c, d;
};
Mobius word_mobius(const CFWord& word);

// Real even Gauss map on rationals: G₂(x) = −1/x − ⌉−1/x⌈₂.
mpq_class gauss_map_real(const mpq_class& x);

CFWord even_rational_decompose(const mpz_class& p, const mpz_class& q);

// Exact |φ(∞) − φ(σ)| = 1/(|p_N|(|q_N| − |p_N|)).
mpq_class roof_diameter(const CFWord& word);

struct GaussStep {
  cplx value;
  long j;  // −⌉Re(−1/z)⌈₂/2
};

GaussStep gauss_map_h(cplx z);

enum class CellKind { E_INF, E_WORD };

struct PartitionCell {
  CellKind kind = CellKind::E_INF;
  CFWord word;
  long long shift = 0;  // even integer 2n₀
  int height = 0;
  std::vector<cplx> orbit;  // z − shift, G₂(z − shift), …, G₂^N(z − shift)
};

struct ClassifyConfig {
  double boundary_eps = 1e-9;
  bool lenient = false;  // pick a side at boundaries instead of throwing
};

PartitionCell classify_point(cplx z, const ClassifyConfig& cfg = {});

std::string kind_name(CellKind kind);

}  // namespace hypf
