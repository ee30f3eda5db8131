#include "fishburn/error.hpp"
#include "fishburn/fishburn_series.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fishburn;
using testing::ints;

TEST_CASE("partial sums of (q;q)_n") {
  CHECK(partial_sum_F(0, 4) == IntSeries::one(4));
  CHECK(partial_sum_F(1, 2) == IntSeries(ints({2, -1}), 2));
  CHECK(partial_sum_F(2, 3) == IntSeries(ints({3, -2, -1, 1}), 3));
  CHECK(partial_sum_F_poly(2) == IntPoly(ints({3, -2, -1, 1})));
  CHECK(partial_sum_F_poly(4).degree() == 10);
}

TEST_CASE("Fishburn numbers") {
  const XiSequence xi = xi_r(1, 8);
  CHECK(xi.values == ints({1, 1, 2, 5, 15, 53, 217, 1014, 5335}));
  CHECK(xi.truncation() == 8);
  CHECK(xi.at(-1) == 0);
  CHECK_THROWS_AS(xi.at(9), Error);
}

TEST_CASE("r-Fishburn numbers for other r") {
  CHECK(xi_r(-1, 8).values == ints({1, -1, 1, -2, 5, -16, 61, -271, 1372}));
  CHECK(xi_r(5, 5).values == ints({1, 5, 40, 435, 6020, 101376}));
  CHECK(xi_r(7, 4).values == ints({1, 7, 77, 1162, 22407}));
  CHECK(xi_r(13, 3).values == ints({1, 13, 260, 7215}));
  try {
    xi_r(0, 5);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroR);
  }
}

TEST_CASE("constant term is 1 for every r") {
  for (long r : {-5, -2, -1, 1, 2, 3, 29}) CHECK(xi_r(r, 3).values[0] == 1);
}

TEST_CASE("truncation stability") {
  constexpr std::size_t big = 60;
  for (long r : {-2, -1, 1, 2, 5}) {
    const XiSequence full = xi_r(r, big);
    for (std::size_t m : {0, 1, 7, 30, 59}) {
      const XiSequence part = xi_r(r, m);
      CAPTURE(r);
      CAPTURE(m);
      CHECK(std::equal(part.values.begin(), part.values.end(), full.values.begin()));
    }
  }
}

TEST_CASE("Fishburn numbers are positive") {
  const XiSequence xi = xi_r(1, 60);
  for (const auto& v : xi.values) CHECK(v > 0);
}

TEST_CASE("T-number route agrees with the direct route") {
  const XiSequence direct = xi_r(1, 40);
  const XiSequence via_t = xi_via_T(40);
  CHECK(via_t.r == 1);
  CHECK(via_t.values == direct.values);
  CHECK(xi_via_T(0).values == ints({1}));
  CHECK(xi_via_T(1).values == ints({1, 1}));
}

TEST_CASE("xibar") {
  CHECK(xi_bar_p(5, 30).values == xi_r(5, 30).values);
  CHECK(xi_bar_p(23, 20).values == xi_r(23, 20).values);
  const XiSequence xi29 = xi_r(29, 20);
  const XiBarSequence bar29 = xi_bar_p(29, 20);
  CHECK(bar29.values[0] == 1);
  for (long n = 1; n <= 20; ++n) CHECK(bar29.at(n) == xi29.at(n) - xi29.at(n - 1));
  CHECK_THROWS_AS(xi_bar_p(9, 5), Error);
}

TEST_CASE("F_p route equals the exact values reduced mod p") {
  for (long p : {5, 7, 11, 13, 43}) {
    for (long r : {-3, -1, 1, 2}) {
      if (r % p == 0) continue;
      const XiSequence exact = xi_r(r, 200);
      const std::vector<long> mod = xi_r_mod(r, 200, p);
      REQUIRE(mod.size() == exact.values.size());
      bool same = true;
      for (std::size_t k = 0; k < mod.size(); ++k) same = same && mod[k] == residue(exact.values[k], p);
      CAPTURE(p);
      CAPTURE(r);
      CHECK(same);
    }
  }
  CHECK_THROWS_AS(xi_r_mod(1, 10, 9), Error);
  CHECK_THROWS_AS(xi_r_mod(0, 10, 5), Error);
}

TEST_CASE("default truncations") {
  CHECK(default_truncation(1) == 500);
  CHECK(default_truncation(-1) == 500);
  CHECK(default_truncation(2) == 200);
}
