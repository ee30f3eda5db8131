#include "fishburn/dissection.hpp"

#include "fishburn/congruence.hpp"
#include "fishburn/fishburn_series.hpp"
#include "fishburn/special_numbers.hpp"

#include <string>

namespace fishburn {

namespace {

std::string str(long x) { return std::to_string(x); }

}  // namespace

const IntPoly& Dissection::component(long i) const {
  if (i < 0 || i >= p) fail(ErrorCode::BadParams, "component index outside [0, p-1]");
  return components[i];
}

IntPoly Dissection::reconstruct() const {
  std::size_t degree = 0;
  for (long i = 0; i < p; ++i) {
    if (!components[i].is_zero()) {
      degree = std::max(degree, static_cast<std::size_t>(i + p * components[i].degree()));
    }
  }
  std::vector<Int> c(degree + 1);
  for (long i = 0; i < p; ++i) {
    const auto a = components[i].coeffs();
    for (std::size_t k = 0; k < a.size(); ++k) c[i + p * k] += a[k];
  }
  return IntPoly(std::move(c));
}

Dissection dissect(long p, unsigned N, std::optional<std::size_t> degree_cap) {
  require_prime_ge5(p);
  const std::size_t full = static_cast<std::size_t>(N) * (N + 1) / 2;
  const std::size_t order = degree_cap ? std::min(*degree_cap, full) : full;
  const IntSeries f = partial_sum_F(N, order);
  std::vector<std::vector<Int>> parts(p);
  for (std::size_t e = 0; e <= order; ++e) parts[e % p].push_back(f[e]);
  Dissection d{p, N, {}};
  d.components.reserve(p);
  for (auto& part : parts) d.components.emplace_back(std::move(part));
  return d;
}

AlphaTable alpha(const Dissection& d, long i, std::size_t kmax) {
  if ((d.N + 1) % d.p != 0) fail(ErrorCode::BadParams, "dissection is not of F(q, pn-1)");
  const long n = static_cast<long>(d.N + 1) / d.p;
  return AlphaTable{d.p, n, i, substitute_one_minus(d.component(i), kmax)};
}

AlphaTable alpha(long p, long n, long i, std::size_t kmax) {
  if (n < 1) fail(ErrorCode::BadParams, "alpha needs pn - 1 >= 0");
  return alpha(dissect(p, static_cast<unsigned>(p * n - 1)), i, kmax);
}

I0Residue i0_of(long p) {
  require_prime_ge5(p);
  const long i0 = (p * p - 1) / 24 - (p / 24) * p;
  if (i0 < 1 || i0 > p - 1 || residue(24 * i0 + 1, p) != 0) {
    fail(ErrorCode::InconsistentI0, "closed form for i0 fails 24 i0 = -1 mod " + str(p));
  }
  return I0Residue{p, i0};
}

GammaValue gamma(unsigned j, long i, long p) {
  require_prime_ge5(p);
  if (i < 0 || i >= p) fail(ErrorCode::BadParams, "gamma: need 0 <= i <= p-1");
  const long big_n = 12 * p;
  const RatPoly b = bernoulli_poly(2 * j + 2);
  GammaValue g{j, i, p, Rat(0), 0};
  Rat sum = 0;
  for (long m = 1; m <= big_n / 2; ++m) {
    const int chi = chi12(m);
    if (chi == 0) continue;  // gcd(m, 12) = 1, so 24 | m^2 - 1
    if (residue((m * m - 1) / 24, p) != i) continue;
    sum += Rat(chi) * b(make_rat(Int(m), Int(big_n)));
    ++g.terms;
  }
  Rat scale = Rat(power(Int(big_n), 2 * j + 1)) / Rat(static_cast<long>(2 * j + 2));
  if (j % 2 == 1) scale = -scale;
  g.value = scale * sum;
  return g;
}

Rat gamma_i0_closed_form(unsigned j, long p) {
  require_prime_ge5(p);
  const RatPoly b = bernoulli_poly(2 * j + 2);
  Rat v = Rat(chi12(p)) * Rat(power(Int(12 * p), 2 * j + 1)) /
          Rat(static_cast<long>(2 * j + 2)) * (b(Rat(1, 12)) - b(Rat(5, 12)));
  return j % 2 == 1 ? Rat(-v) : v;
}

VerificationReport verify_apjid(long p, long i, unsigned nmax) {
  require_prime_ge5(p);
  if (i < 0 || i >= p) fail(ErrorCode::BadParams, "verify_apjid: need 0 <= i <= p-1");
  VerificationReport rep;
  rep.claim = "sum_j C(n,i,j,p) A_p^(j)(p(j+1)-1,i,1) = (-1)^n/24^n sum_j binom(n,j) gamma(j,i)";
  rep.range = "p=" + str(p) + ", i=" + str(i) + ", 0 <= n <= " + str(nmax);

  // A_p^{(j)}(p(j+1)-1, i, 1) and gamma(j, i) for j <= nmax
  std::vector<Int> deriv_at_one(nmax + 1);
  std::vector<Rat> gammas(nmax + 1);
  for (unsigned j = 0; j <= nmax; ++j) {
    const Dissection d = dissect(p, static_cast<unsigned>(p * (j + 1) - 1));
    deriv_at_one[j] = d.component(i).derivative(j)(Int(1));
    gammas[j] = gamma(j, i, p).value;
  }
  const CArray<Int> c = c_array(nmax, i, p);
  for (unsigned n = 0; n <= nmax; ++n) {
    Int lhs = 0;
    for (unsigned j = 0; j <= n; ++j) lhs += c.at(n, j) * deriv_at_one[j];
    Rat rhs = 0;
    for (unsigned j = 0; j <= n; ++j) rhs += Rat(binomial(n, j)) * gammas[j];
    rhs /= Rat(power(Int(-24), n));
    ++rep.checks;
    if (Rat(lhs) != rhs) {
      rep.record_failure("n=" + str(n) + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
    }
  }
  return rep;
}

VerificationReport verify_newxithm(long p, unsigned nmax) {
  const I0Residue i0 = i0_of(p);
  VerificationReport rep;
  rep.claim = "alpha(p,n,i0,k) = p (12/p) xibar_p(k)";
  rep.range = "p=" + str(p) + ", i0=" + str(i0.i0) + ", 1 <= n <= " + str(nmax) + ", 0 <= k <= n-1";
  if (nmax == 0) return rep;
  const XiBarSequence xibar = xi_bar_p(p, nmax - 1);
  const Int factor = Int(p) * chi12(p);
  for (unsigned n = 1; n <= nmax; ++n) {
    const AlphaTable a = alpha(p, n, i0.i0, n - 1);
    for (unsigned k = 0; k < n; ++k) {
      ++rep.checks;
      const Int expected = factor * xibar.at(k);
      if (a[k] != expected) {
        rep.record_failure("n=" + str(n) + ", k=" + str(k) + ": alpha=" + to_string(a[k]) +
                           " expected=" + to_string(expected));
      }
    }
  }
  return rep;
}

Rat a1_closed_form(long p, const Rat& z, long m, std::span<const Rat> X, unsigned n) {
  if (X.size() <= n) fail(ErrorCode::BadParams, "X needs at least n+1 entries");
  const StirlingTable s = stirling_table(n, m);
  Rat acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (X[k] == 0) continue;
    for (unsigned j = k; j <= n; ++j) {
      const long e = static_cast<long>(j) - 2 * static_cast<long>(k);
      const Rat pp = e >= 0 ? Rat(power(Int(p), e)) : Rat(Int(1), power(Int(p), -e));
      acc += Rat(Int(binomial(j, k) * s[j])) * pp * X[k] * power(z, j);
    }
  }
  return n % 2 == 0 ? acc : Rat(-acc);
}

VerificationReport verify_a1id(long p, const Rat& z, long m, std::span<const Rat> X,
                               unsigned nmax) {
  require_prime_ge5(p);
  if (X.size() <= nmax) fail(ErrorCode::BadParams, "verify_a1id: X needs nmax+1 entries");
  const Rat i0 = Rat(p * p - 1) * z - Rat(m * p);
  VerificationReport rep;
  rep.claim = "sum_l C(n,i0,l,p) A_1(l,m) = (-1)^n z^n sum_k binom(n,k) X(k)";
  rep.range = "p=" + str(p) + ", z=" + to_string(z) + ", m=" + str(m) + ", 0 <= n <= " + str(nmax);

  std::vector<Rat> a1(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) a1[n] = a1_closed_form(p, z, m, X, n);
  const CArray<Rat> c = c_array(nmax, i0, p);
  for (unsigned n = 0; n <= nmax; ++n) {
    Rat lhs = 0;
    for (unsigned l = 0; l <= n; ++l) lhs += c.at(n, l) * a1[l];
    Rat rhs = 0;
    for (unsigned k = 0; k <= n; ++k) rhs += Rat(binomial(n, k)) * X[k];
    rhs *= power(z, n);
    if (n % 2 == 1) rhs = -rhs;
    ++rep.checks;
    if (lhs != rhs) {
      rep.record_failure("n=" + str(n) + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
    }
  }
  return rep;
}

VerificationReport verify_vanishing_lemma(long p, unsigned nmax) {
  const ResidueSet s = s_set(p);
  VerificationReport rep;
  rep.claim = "alpha(p,n,i,k) = 0 for i not in S(p)";
  rep.range = "p=" + str(p) + ", 1 <= n <= " + str(nmax) + ", 0 <= k <= n-1";
  for (unsigned n = 1; n <= nmax; ++n) {
    const Dissection d = dissect(p, static_cast<unsigned>(p * n - 1));
    for (long i = 0; i < p; ++i) {
      if (s.contains(i)) continue;
      const AlphaTable a = alpha(d, i, n - 1);
      for (unsigned k = 0; k < n; ++k) {
        ++rep.checks;
        if (a[k] != 0) rep.record_failure("n=" + str(n) + ", i=" + str(i) + ", k=" + str(k));
      }
    }
  }
  return rep;
}

VerificationReport verify_alpha_stability(long p, unsigned nmax) {
  require_prime_ge5(p);
  VerificationReport rep;
  rep.claim = "alpha(p,N,j,k) = alpha(p,M,j,k) for k <= M-1 <= N-1";
  rep.range = "p=" + str(p) + ", 1 <= M < N <= " + str(nmax) + ", all j";
  if (nmax == 0) return rep;
  // tables[n-1][j] = alpha(p,n,j,0..nmax-1)
  std::vector<std::vector<AlphaTable>> tables;
  for (unsigned n = 1; n <= nmax; ++n) {
    const Dissection d = dissect(p, static_cast<unsigned>(p * n - 1));
    std::vector<AlphaTable> row;
    for (long j = 0; j < p; ++j) row.push_back(alpha(d, j, nmax - 1));
    tables.push_back(std::move(row));
  }
  for (unsigned big = 2; big <= nmax; ++big) {
    for (unsigned small = 1; small < big; ++small) {
      for (long j = 0; j < p; ++j) {
        for (unsigned k = 0; k < small; ++k) {
          ++rep.checks;
          if (tables[big - 1][j][k] != tables[small - 1][j][k]) {
            rep.record_failure("N=" + str(big) + ", M=" + str(small) + ", j=" + str(j) + ", k=" + str(k));
          }
        }
      }
    }
  }
  return rep;
}

VerificationReport verify_reconstruction(long p, unsigned N) {
  const Dissection d = dissect(p, N);
  VerificationReport rep;
  rep.claim = "sum_i q^i A_p(N,i,q^p) = F(q,N)";
  rep.range = "p=" + str(p) + ", N=" + str(N);
  rep.checks = 1;
  if (d.reconstruct() != partial_sum_F_poly(N)) rep.record_failure("N=" + str(N));
  return rep;
}

}  // namespace fishburn
