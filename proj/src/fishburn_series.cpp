#include "fishburn/fishburn_series.hpp"

#include "fishburn/special_numbers.hpp"

#include <cstdlib>
#include <string>

namespace fishburn {

namespace {

Int coefficient_at(const std::vector<Int>& values, long n) {
  if (n < 0) return 0;
  if (static_cast<std::size_t>(n) >= values.size()) {
    fail(ErrorCode::BadParams, "index " + std::to_string(n) + " beyond truncation " +
                                   std::to_string(values.size() - 1));
  }
  return values[n];
}

// v <- v * (1 - q)^e, truncated to v's length.
void mul_one_minus_q_pow(std::vector<Int>& v, long e) {
  const std::size_t len = v.size();
  if (len == 0 || e == 0) return;
  const unsigned long steps = static_cast<unsigned long>(std::labs(e));
  if (steps <= 4 * len) {
    for (unsigned long s = 0; s < steps; ++s) {
      if (e > 0) {
        for (std::size_t k = len - 1; k >= 1; --k) v[k] -= v[k - 1];
      } else {
        for (std::size_t k = 1; k < len; ++k) v[k] += v[k - 1];
      }
    }
    return;
  }
  // Long exponent: convolve with the binomial series instead.
  std::vector<Int> b(len);
  b[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    // b_k = b_{k-1} * (k - 1 - e) / k, i.e. (-1)^k binom(e, k)
    b[k] = b[k - 1] * Int(static_cast<long>(k) - 1 - e);
    mpz_divexact_ui(b[k].get_mpz_t(), b[k].get_mpz_t(), k);
  }
  std::vector<Int> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (b[j] != 0) out[i + j] += v[i] * b[j];
    }
  }
  v = std::move(out);
}

}  // namespace

Int XiSequence::at(long n) const { return coefficient_at(values, n); }

Int XiBarSequence::at(long n) const { return coefficient_at(values, n); }

IntSeries partial_sum_F(unsigned N, std::size_t order) {
  std::vector<Int> sum(order + 1), poch(order + 1);
  poch[0] = 1;
  sum[0] = 1;
  for (unsigned n = 1; n <= N; ++n) {
    // (q;q)_n = (q;q)_{n-1} (1 - q^n)
    for (std::size_t k = order; k >= n && k <= order; --k) poch[k] -= poch[k - n];
    for (std::size_t k = 0; k <= order; ++k) sum[k] += poch[k];
  }
  return IntSeries(std::move(sum), order);
}

IntPoly partial_sum_F_poly(unsigned N) {
  const std::size_t degree = static_cast<std::size_t>(N) * (N + 1) / 2;
  const IntSeries s = partial_sum_F(N, degree);
  return IntPoly(std::vector<Int>(s.coeffs().begin(), s.coeffs().end()));
}

XiSequence xi_r(long r, std::size_t N) {
  if (r == 0) fail(ErrorCode::ZeroR, "xi_r: r must be nonzero");
  std::vector<Int> sum(N + 1), poch(N + 1), scratch;
  sum[0] = 1;
  poch[0] = 1;
  // poch holds (x;x)_{n-1}, whose coefficients vanish below q^{n-1}.
  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t lo = n - 1;
    scratch.assign(poch.begin() + static_cast<long>(lo), poch.end());
    mul_one_minus_q_pow(scratch, r * static_cast<long>(n));
    for (std::size_t k = lo; k <= N; ++k) poch[k] -= scratch[k - lo];
    if (poch[lo] != 0) fail(ErrorCode::Internal, "xi_r: Pochhammer term has wrong q-order");
    for (std::size_t k = n; k <= N; ++k) sum[k] += poch[k];
  }
  return XiSequence{r, std::move(sum)};
}

XiSequence xi_via_T(std::size_t N) {
  // F(1-q) = (1-q)^{-1/24} sum_k T_k/k! (-log(1-q)/24)^k and
  // (-log(1-q))^k/k! = sum_m s1(m,k) q^m/m!  (signless), so
  // xi(n) = sum_m (-1)^{n-m} binom(-1/24, n-m) sum_k s1(m,k) T_k/(m! 24^k).
  std::vector<Int> t(N + 1);
  for (std::size_t k = 0; k <= N; ++k) t[k] = glaisher_T(static_cast<unsigned>(k));

  std::vector<Rat> inner(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    const StirlingTable s = stirling_table(static_cast<unsigned>(m), 0);
    Rat acc = 0;
    Int scale = 1;  // 24^k
    for (std::size_t k = 0; k <= m; ++k) {
      acc += Rat(s[static_cast<long>(k)] * t[k]) / Rat(scale);
      scale *= 24;
    }
    inner[m] = acc / Rat(factorial(m));
  }

  std::vector<Rat> outer(N + 1);  // (-1)^j binom(-1/24, j)
  for (std::size_t j = 0; j <= N; ++j) {
    outer[j] = rational_binom(Rat(-1, 24), j);
    if (j % 2 == 1) outer[j] = -outer[j];
  }

  std::vector<Int> values(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t m = 0; m <= n; ++m) acc += outer[n - m] * inner[m];
    values[n] = to_integer(acc, "xi_via_T(" + std::to_string(n) + ")");
  }
  return XiSequence{1, std::move(values)};
}

std::vector<long> xi_r_mod(long r, std::size_t N, long p) {
  if (r == 0) fail(ErrorCode::ZeroR, "xi_r_mod: r must be nonzero");
  if (!is_prime(p)) fail(ErrorCode::BadParams, "xi_r_mod: modulus must be prime");
  std::vector<long> sum(N + 1, 0), poch(N + 1, 0), scratch;
  sum[0] = 1 % p;
  poch[0] = 1 % p;
  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t lo = n - 1;
    const std::size_t len = N + 1 - lo;
    scratch.assign(poch.begin() + static_cast<long>(lo), poch.end());
    // (1-q)^e = prod_k (1-q^{p^k})^{d_k} mod p, d_k the base-p digits of e
    unsigned long e = static_cast<unsigned long>(std::labs(r)) * n;
    for (std::size_t step = 1; e > 0 && step < len; e /= p, step *= p) {
      for (unsigned long d = e % p; d > 0; --d) {
        if (r > 0) {
          for (std::size_t k = len - 1; k >= step; --k) {
            scratch[k] -= scratch[k - step];
            if (scratch[k] < 0) scratch[k] += p;
          }
        } else {
          for (std::size_t k = step; k < len; ++k) {
            scratch[k] += scratch[k - step];
            if (scratch[k] >= p) scratch[k] -= p;
          }
        }
      }
    }
    for (std::size_t k = lo; k <= N; ++k) {
      poch[k] -= scratch[k - lo];
      if (poch[k] < 0) poch[k] += p;
    }
    if (poch[lo] != 0) fail(ErrorCode::Internal, "xi_r_mod: Pochhammer term has wrong q-order");
    for (std::size_t k = n; k <= N; ++k) {
      sum[k] += poch[k];
      if (sum[k] >= p) sum[k] -= p;
    }
  }
  return sum;
}

XiBarSequence xi_bar_p(long p, std::size_t N) {
  require_prime_ge5(p);
  XiSequence xi = xi_r(p, N);
  mul_one_minus_q_pow(xi.values, p / 24);
  return XiBarSequence{p, std::move(xi.values)};
}

std::size_t default_truncation(long r) noexcept { return r == 1 || r == -1 ? 500 : 200; }

}  // namespace fishburn
