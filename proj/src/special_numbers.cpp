#include "fishburn/special_numbers.hpp"

#include <map>
#include <mutex>
#include <string>

namespace fishburn {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache{Rat(1)};

std::mutex stirling_mutex;
// m -> rows; rows[n][j] = s1(n, j, m)
std::map<long, std::vector<std::vector<Int>>> stirling_cache;

}  // namespace

Rat bernoulli_number(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{k=0}^{i} binom(i+1, k) B_k = 0
  while (bernoulli_cache.size() <= n) {
    const unsigned i = static_cast<unsigned>(bernoulli_cache.size());
    Rat acc = 0;
    for (unsigned k = 0; k < i; ++k) acc += Rat(binomial(i + 1, k)) * bernoulli_cache[k];
    bernoulli_cache.push_back(-acc / Rat(static_cast<long>(i + 1)));
  }
  return bernoulli_cache[n];
}

RatPoly bernoulli_poly(unsigned n) {
  // B_n(x) = sum_k binom(n,k) B_k x^{n-k}
  std::vector<Rat> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] = Rat(binomial(n, k)) * bernoulli_number(k);
  return RatPoly(std::move(c));
}

Int glaisher_T(unsigned n) {
  const RatPoly b = bernoulli_poly(2 * n + 2);
  const Rat diff = b(Rat(1, 12)) - b(Rat(5, 12));
  const Rat t = Rat(6) * Rat(power(Int(-144), n)) / Rat(static_cast<long>(n + 1)) * diff;
  return to_integer(t, "glaisher_T(" + std::to_string(n) + ")");
}

StirlingTable stirling_table(unsigned n, long m) {
  std::lock_guard lock(stirling_mutex);
  auto& rows = stirling_cache[m];
  if (rows.empty()) rows.push_back({Int(1)});
  // row k+1 = row k * (x - m + k)
  while (rows.size() <= n) {
    const long k = static_cast<long>(rows.size()) - 1;
    const Int shift(k - m);
    const auto& prev = rows.back();
    std::vector<Int> next(prev.size() + 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] += prev[j];
      next[j] += shift * prev[j];
    }
    rows.push_back(std::move(next));
  }
  return StirlingTable{n, m, rows[n]};
}

Int gen_stirling1(long n, long j, long m) {
  if (n < 0 || j < 0 || j > n) return 0;
  return stirling_table(static_cast<unsigned>(n), m)[j];
}

IntPoly f_poly(long n, long k, long m) {
  if (k < 0 || n < 0 || k > n) return {};
  const StirlingTable s = stirling_table(static_cast<unsigned>(n), m);
  std::vector<Int> c(n + 1);
  const Int sign = n % 2 == 0 ? 1 : -1;
  for (long j = k; j <= n; ++j) c[j] = sign * binomial(j, k) * s[j];
  return IntPoly(std::move(c));
}

IntPoly f_poly_recursive(long n, long k, long m) {
  if (k < 0 || n < 0 || k > n) return {};
  // table[kk] holds f(x, level, kk, m) for kk = 0..level
  std::vector<IntPoly> level{IntPoly::constant(1)};
  const IntPoly x = IntPoly::monomial(1, 1);
  for (long l = 0; l < n; ++l) {
    std::vector<IntPoly> next(l + 2);
    const IntPoly factor = x + IntPoly::constant(Int(l - m));
    for (long kk = 0; kk <= l + 1; ++kk) {
      IntPoly a = kk <= l ? factor * level[kk] : IntPoly();
      IntPoly b = kk >= 1 ? x * level[kk - 1] : IntPoly();
      next[kk] = -(a + b);
    }
    level = std::move(next);
  }
  return level[k];
}

CArray<Int> c_array(unsigned nmax, long i, long p) {
  if (!is_prime(p)) fail(ErrorCode::BadParams, "c_array: p must be prime");
  if (i < 0 || i >= p) fail(ErrorCode::BadParams, "c_array: need 0 <= i <= p-1");
  return CArray<Int>(nmax, Int(i), p);
}

CArray<Rat> c_array(unsigned nmax, const Rat& i, long p) {
  if (p <= 0) fail(ErrorCode::BadParams, "c_array: p must be positive");
  return CArray<Rat>(nmax, i, p);
}

int chi12(long n) {
  switch (residue(n, 12)) {
    case 1:
    case 11: return 1;
    case 5:
    case 7: return -1;
    default: return 0;
  }
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime_ge5(long p) {
  if (p < 5 || !is_prime(p)) {
    fail(ErrorCode::BadParams, "p must be a prime >= 5, got " + std::to_string(p));
  }
}

long pow_mod(long base, unsigned long e, long p) {
  long long result = 1 % p;
  long long b = residue(base, p);
  while (e > 0) {
    if (e & 1UL) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<long>(result);
}

int legendre(long a, long p) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::BadParams, "legendre: p must be an odd prime");
  const long r = pow_mod(a, static_cast<unsigned long>((p - 1) / 2), p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

long inverse_mod(long a, long p) {
  long old_r = residue(a, p), r = p;
  long old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(ErrorCode::BadParams, "no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  return residue(old_s, p);
}

}  // namespace fishburn
