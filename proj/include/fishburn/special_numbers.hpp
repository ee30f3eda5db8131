#pragma once

// Bernoulli polynomials, Glaisher T-numbers, generalized Stirling numbers of
// the first kind, the f-polynomials, the C(n,i,j,p) array, the character
// mod 12 and the Legendre symbol.

#include "fishburn/poly.hpp"

#include <cstddef>
#include <vector>

namespace fishburn {

/// B_n with B_1 = -1/2 (generating function t e^{xt}/(e^t - 1)). Memoized.
Rat bernoulli_number(unsigned n);

RatPoly bernoulli_poly(unsigned n);

/// T_n = 6 (-144)^n/(n+1) [B_{2n+2}(1/12) - B_{2n+2}(5/12)].
/// Throws NonIntegralResult if the rational is not an integer.
Int glaisher_T(unsigned n);

/// Coefficients s1(n, j, m), j = 0..n, of (x - m)(x - m + 1)...(x - m + n - 1).
/// m = 0 gives the signless Stirling numbers of the first kind.
struct StirlingTable {
  unsigned n = 0;
  long m = 0;
  std::vector<Int> coeffs;

  Int operator[](long j) const {
    return j >= 0 && static_cast<std::size_t>(j) < coeffs.size() ? coeffs[j] : Int(0);
  }
};

StirlingTable stirling_table(unsigned n, long m);

/// 0 outside 0 <= j <= n.
Int gen_stirling1(long n, long j, long m);

/// f(x,n,k,m) = (-1)^n sum_{j=k}^n binom(j,k) s1(n,j,m) x^j for 0 <= k <= n,
/// zero otherwise.
IntPoly f_poly(long n, long k, long m);

/// Same polynomial built by f(x,n+1,k,m) = -((x+n-m) f(x,n,k,m) + x f(x,n,k-1,m)).
IntPoly f_poly_recursive(long n, long k, long m);

/// C(n,i,j,p) for n = 0..nmax, 0 <= j <= n, from
/// C(n+1,i,j,p) = (i + jp) C(n,i,j,p) + p C(n,i,j-1,p), C(0,i,0,p) = 1.
/// `i` is rational on the symbolic path (i0 = (p^2-1)z - mp).
template <Coefficient T>
class CArray {
 public:
  CArray(unsigned nmax, const T& i, long p) : p_(p), i_(i), rows_(nmax + 1) {
    rows_[0] = {T(1)};
    const T pp(p);
    for (unsigned n = 0; n < nmax; ++n) {
      std::vector<T> next(n + 2);
      for (unsigned j = 0; j <= n + 1; ++j) {
        T v = 0;
        if (j <= n) v += (i + T(static_cast<long>(j)) * pp) * rows_[n][j];
        if (j >= 1) v += pp * rows_[n][j - 1];
        next[j] = v;
      }
      rows_[n + 1] = std::move(next);
    }
  }

  long p() const noexcept { return p_; }
  const T& i() const noexcept { return i_; }
  unsigned nmax() const noexcept { return static_cast<unsigned>(rows_.size() - 1); }

  /// Zero outside 0 <= j <= n <= nmax.
  T at(long n, long j) const {
    if (n < 0 || j < 0 || j > n || n > static_cast<long>(nmax())) return T(0);
    return rows_[n][j];
  }

 private:
  long p_;
  T i_;
  std::vector<std::vector<T>> rows_;
};

/// Integer slice; BadParams unless p is prime and 0 <= i <= p-1.
CArray<Int> c_array(unsigned nmax, long i, long p);

/// Symbolic slice for a rational i; p only needs to be positive.
CArray<Rat> c_array(unsigned nmax, const Rat& i, long p);

/// The character mod 12: 1 if n = +-1, -1 if n = +-5 (mod 12), else 0.
int chi12(long n);

/// Legendre symbol (a/p) by Euler's criterion; BadParams unless p is an odd prime.
int legendre(long a, long p);

bool is_prime(long n);

/// BadParams unless p is a prime >= 5.
void require_prime_ge5(long p);

long pow_mod(long base, unsigned long e, long p);

/// a^{-1} mod p by extended Euclid; BadParams if gcd(a, p) != 1.
long inverse_mod(long a, long p);

}  // namespace fishburn
