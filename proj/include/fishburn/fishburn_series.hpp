#pragma once

// r-Fishburn numbers: coefficients of F((1-q)^r) with F(q) = sum_n (q;q)_n.

#include "fishburn/poly.hpp"

#include <cstddef>
#include <vector>

namespace fishburn {

/// xi_r(n) for n = 0..N.
struct XiSequence {
  long r = 1;
  std::vector<Int> values;

  std::size_t truncation() const noexcept { return values.size() - 1; }

  /// Zero for n < 0 (coefficients below q^0); BadParams past the truncation.
  Int at(long n) const;
};

/// Coefficients of (1-q)^{floor(p/24)} F((1-q)^p), n = 0..N.
struct XiBarSequence {
  long p = 5;
  std::vector<Int> values;

  std::size_t truncation() const noexcept { return values.size() - 1; }
  Int at(long n) const;
};

/// sum_{n=0}^{N} (q;q)_n, truncated at q^order.
IntSeries partial_sum_F(unsigned N, std::size_t order);

/// F(q, N) as an exact polynomial of degree N(N+1)/2.
IntPoly partial_sum_F_poly(unsigned N);

/// Sum of (x;x)_n over n <= N with x = (1-q)^r. Each 1 - x^j has q-order
/// exactly 1, so (x;x)_n starts at q^n and the partial sum is exact to q^N.
/// ZeroR for r = 0.
XiSequence xi_r(long r, std::size_t N);

/// Fishburn numbers (r = 1) from Glaisher T-numbers and Stirling numbers in
/// exact rational arithmetic. Slow; meant as an independent route.
XiSequence xi_via_T(std::size_t N);

XiBarSequence xi_bar_p(long p, std::size_t N);

/// xi_r(n) mod p for n = 0..N, least nonnegative residues, computed in F_p
/// throughout. Needs p prime.
std::vector<long> xi_r_mod(long r, std::size_t N, long p);

/// 500 for r = +-1, 200 otherwise.
std::size_t default_truncation(long r) noexcept;

inline constexpr std::size_t kXiViaTDefault = 60;

}  // namespace fishburn
