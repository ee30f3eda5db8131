#include "fishburn/error.hpp"
#include "fishburn/special_numbers.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fishburn;
using testing::glaisher_from_expansion;
using testing::ints;

namespace {

IntPoly shifted_rising(long n, long m) {
  IntPoly p = IntPoly::constant(1);
  for (long k = 0; k < n; ++k) p = p * IntPoly(ints({k - m, 1}));
  return p;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(2) == Rat(1, 6));
  CHECK(bernoulli_number(4) == Rat(-1, 30));
  CHECK(bernoulli_number(12) == Rat(-691, 2730));
  for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(0) == RatPoly::constant(1));
  const RatPoly b2 = bernoulli_poly(2);
  CHECK(b2 == RatPoly(std::vector<Rat>{Rat(1, 6), -1, 1}));
  CHECK(b2(Rat(1, 12)) == Rat(13, 144));
  CHECK(b2(Rat(5, 12)) == Rat(-11, 144));
  // B_n(x+1) - B_n(x) = n x^{n-1}
  for (unsigned n = 1; n <= 12; ++n) {
    const RatPoly b = bernoulli_poly(n);
    for (long x = -3; x <= 3; ++x) {
      const Rat lhs = b(Rat(x + 1)) - b(Rat(x));
      CHECK(lhs == Rat(static_cast<long>(n)) * power(Rat(x), n - 1));
    }
  }
  // B_n(1 - x) = (-1)^n B_n(x)
  for (unsigned n = 0; n <= 10; ++n) {
    const RatPoly b = bernoulli_poly(n);
    const Rat x(2, 7);
    CHECK(b(Rat(Rat(1) - x)) == (n % 2 ? Rat(-b(x)) : b(x)));
  }
}

TEST_CASE("Glaisher T values") {
  const std::vector<Int> expected = {Int(1), Int(23), Int(1681), Int(257543), Int(67637281),
                                     Int("27138236663"), Int("15442193173681")};
  for (unsigned n = 0; n < expected.size(); ++n) CHECK(glaisher_T(n) == expected[n]);
}

TEST_CASE("Glaisher T agrees with the exponential expansion") {
  const std::vector<Int> oracle = glaisher_from_expansion(6);
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(glaisher_T(n) == oracle[n]);
  }
}

TEST_CASE("generalized Stirling numbers") {
  CHECK(gen_stirling1(3, 1, 0) == 2);
  CHECK(gen_stirling1(2, 1, 1) == -1);
  for (long n = 0; n <= 6; ++n) {
    for (long m = -2; m <= 3; ++m) CHECK(gen_stirling1(n, n, m) == 1);
  }
  CHECK(gen_stirling1(3, 4, 0) == 0);
  CHECK(gen_stirling1(3, -1, 0) == 0);
  // m = 0 is the classical signless table: s(5, .) = 0, 24, 50, 35, 10, 1
  const StirlingTable s5 = stirling_table(5, 0);
  CHECK(s5.coeffs == ints({0, 24, 50, 35, 10, 1}));
}

TEST_CASE("Stirling table equals the expanded product") {
  for (long n = 0; n <= 12; ++n) {
    for (long m = 0; m <= 4; ++m) {
      const IntPoly prod = shifted_rising(n, m);
      for (long j = 0; j <= n; ++j) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(j);
        CHECK(gen_stirling1(n, j, m) == prod.coeff(j));
      }
    }
  }
}

TEST_CASE("Stirling generating function (1-x)^{k-u}") {
  constexpr std::size_t order = 10;
  for (long u = -2; u <= 3; ++u) {
    for (long k = 0; k <= 2; ++k) {
      const IntSeries rhs = series_int_pow(IntSeries::one_minus_q(order), k - u);
      for (unsigned n = 0; n <= order; ++n) {
        const StirlingTable s = stirling_table(n, k);
        Int lhs = 0;
        for (long j = 0; j <= static_cast<long>(n); ++j) lhs += s[j] * power(Int(u), j);
        CAPTURE(u);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(lhs == rhs[n] * factorial(n));
      }
    }
  }
}

TEST_CASE("f polynomials") {
  CHECK(f_poly(0, 0, 3) == IntPoly::constant(1));
  CHECK(f_poly(1, 0, 0) == IntPoly(ints({0, -1})));
  CHECK(f_poly(2, 3, 0).is_zero());
  CHECK(f_poly(2, -1, 0).is_zero());
  for (long n = 0; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long m = 0; m <= 3; ++m) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(m);
        CHECK(f_poly(n, k, m) == f_poly_recursive(n, k, m));
      }
    }
  }
}

TEST_CASE("C array") {
  for (long p : {5, 7, 11}) {
    for (long i = 0; i < p; ++i) {
      const CArray<Int> c = c_array(8, i, p);
      CHECK(c.at(0, 0) == 1);
      CHECK(c.at(1, 1) == p);
      for (long n = 0; n <= 8; ++n) {
        CHECK(c.at(n, 0) == power(Int(i), n));
        CHECK(c.at(n, n) == power(Int(p), n));
      }
      CHECK(c.at(3, 4) == 0);
      CHECK(c.at(3, -1) == 0);
      CHECK(c.at(9, 0) == 0);
    }
  }
  CHECK_THROWS_AS(c_array(3, 5L, 5), Error);
  CHECK_THROWS_AS(c_array(3, 1L, 9), Error);
  // the rational slice at an integer i matches the integer slice
  const CArray<Rat> cr = c_array(5, Rat(3), 7);
  const CArray<Int> ci = c_array(5, 3L, 7);
  for (long n = 0; n <= 5; ++n) {
    for (long j = 0; j <= n; ++j) CHECK(cr.at(n, j) == Rat(ci.at(n, j)));
  }
}

TEST_CASE("chi12") {
  CHECK(chi12(13) == 1);
  CHECK(chi12(5) == -1);
  CHECK(chi12(6) == 0);
  CHECK(chi12(-1) == 1);
  CHECK(chi12(-5) == -1);
  CHECK(chi12(11) == 1);
  CHECK(chi12(7) == -1);
}

TEST_CASE("Legendre symbol") {
  CHECK(legendre(0, 7) == 0);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(5, 7) == -1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(14, 7) == 0);
  CHECK_THROWS_AS(legendre(1, 2), Error);
  CHECK_THROWS_AS(legendre(1, 9), Error);
  // against an enumeration of squares
  for (long p : {3, 5, 7, 11, 13, 29}) {
    std::vector<bool> square(p, false);
    for (long x = 1; x < p; ++x) square[x * x % p] = true;
    for (long a = 1; a < p; ++a) CHECK(legendre(a, p) == (square[a] ? 1 : -1));
  }
}

TEST_CASE("chi12(p) is the Kronecker symbol (12/p)") {
  // (12/p) = (4/p)(3/p) = (3/p) = (p/3)(-1)^{(p-1)/2} by reciprocity
  for (long p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const int p_over_3 = p % 3 == 1 ? 1 : -1;
    const int sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    CAPTURE(p);
    CHECK(chi12(p) == p_over_3 * sign);
    CHECK(chi12(p) == legendre(12, p));
  }
}

TEST_CASE("modular helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(pow_mod(3, 4, 7) == 4);
  CHECK(pow_mod(-2, 3, 7) == 6);
  for (long a = 1; a < 13; ++a) CHECK(residue(a * inverse_mod(a, 13), 13) == 1);
  CHECK(inverse_mod(-1, 43) == 42);
  CHECK_THROWS_AS(inverse_mod(6, 9), Error);
  CHECK_THROWS_AS(require_prime_ge5(3), Error);
  CHECK_NOTHROW(require_prime_ge5(5));
}
