#pragma once

// p-dissection of the partial sums F(q,N) and the identities built on it:
// the alpha coefficients, gamma(j,i), and checkers for the vanishing lemma,
// alpha stability, the i0 relation with xi-bar, the derivative identity at
// q = 1, and the triangular-system solution A_1(n,m).

#include "fishburn/poly.hpp"
#include "fishburn/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fishburn {

/// F(q,N) = sum_{i=0}^{p-1} q^i A_p(N,i,q^p).
struct Dissection {
  long p = 5;
  unsigned N = 0;
  std::vector<IntPoly> components;  // components[i] = A_p(N,i,.)

  const IntPoly& component(long i) const;

  /// sum_i q^i A_p(N,i,q^p); equals F(q,N) (or its truncation at degree_cap).
  IntPoly reconstruct() const;
};

/// `degree_cap`, when given, truncates F(q,N) at q^degree_cap before splitting.
Dissection dissect(long p, unsigned N, std::optional<std::size_t> degree_cap = std::nullopt);

/// alpha(p,n,i,k) for k = 0..kmax: coefficients of A_p(pn-1, i, 1-q).
struct AlphaTable {
  long p = 5;
  long n = 1;
  long i = 0;
  std::vector<Int> coeffs;

  Int operator[](std::size_t k) const { return coeffs.at(k); }
};

AlphaTable alpha(long p, long n, long i, std::size_t kmax);

/// Same, reusing a dissection of F(q, pn-1); BadParams if d.N + 1 is not a
/// multiple of d.p.
AlphaTable alpha(const Dissection& d, long i, std::size_t kmax);

/// The residue i0 in [1, p-1] with 24 i0 = -1 (mod p).
struct I0Residue {
  long p = 5;
  long i0 = 1;
};

/// Closed form (p^2-1)/24 - floor(p/24) p, cross-checked against the
/// congruence; InconsistentI0 if they disagree.
I0Residue i0_of(long p);

struct GammaValue {
  unsigned j = 0;
  long i = 0;
  long p = 5;
  Rat value;
  std::size_t terms = 0;  // number of m contributing to the restricted sum
};

/// (-1)^j (12p)^{2j+1}/(2j+2) sum chi(m) B_{2j+2}(m/(12p)) over 1 <= m <= 6p
/// with chi(m) != 0 and (m^2-1)/24 = i (mod p).
GammaValue gamma(unsigned j, long i, long p);

/// Closed form at i = i0, where only m = p and m = 5p contribute.
Rat gamma_i0_closed_form(unsigned j, long p);

/// sum_j C(n,i,j,p) A_p^{(j)}(p(j+1)-1,i,1) = (-1)^n/24^n sum_j binom(n,j) gamma(j,i)
/// for n = 0..nmax. A^{(j)} is the j-th derivative in the polynomial's own
/// variable, evaluated at 1.
VerificationReport verify_apjid(long p, long i, unsigned nmax);

/// alpha(p,n,i0,k) = p chi(p) xi-bar_p(k) for 1 <= n <= nmax, 0 <= k <= n-1.
VerificationReport verify_newxithm(long p, unsigned nmax);

/// With i0 = (p^2-1)z - mp, A_1(n,m) from the closed double sum satisfies
/// sum_l C(n,i0,l,p) A_1(l,m) = (-1)^n z^n sum_k binom(n,k) X(k), n <= nmax.
/// Needs X.size() > nmax.
VerificationReport verify_a1id(long p, const Rat& z, long m, std::span<const Rat> X,
                               unsigned nmax);

/// A_1(n,m) by the closed double sum.
Rat a1_closed_form(long p, const Rat& z, long m, std::span<const Rat> X, unsigned n);

/// alpha(p,n,i,k) = 0 for every i outside S(p), 1 <= n <= nmax, k <= n-1.
VerificationReport verify_vanishing_lemma(long p, unsigned nmax);

/// alpha(p,N,j,k) = alpha(p,M,j,k) for all j, 1 <= M < N <= nmax, k <= M-1.
VerificationReport verify_alpha_stability(long p, unsigned nmax);

/// reconstruct() == F(q,N) exactly.
VerificationReport verify_reconstruction(long p, unsigned N);

}  // namespace fishburn
