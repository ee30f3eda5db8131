#pragma once

#include "fishburn/poly.hpp"
#include "fishburn/series.hpp"

#include <random>
#include <vector>

namespace testing {

using fishburn::Int;
using fishburn::IntPoly;
using fishburn::IntSeries;

inline std::mt19937& rng() {
  static std::mt19937 gen(1234567);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntSeries random_series(std::size_t order, long bound = 9) {
  std::vector<Int> c(order + 1);
  for (auto& x : c) x = uniform(-bound, bound);
  return IntSeries(std::move(c), order);
}

// constant term +-1, so the series is a unit over the integers
inline IntSeries random_unit_series(std::size_t order, long bound = 9) {
  IntSeries s = random_series(order, bound);
  std::vector<Int> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = uniform(0, 1) ? 1 : -1;
  return IntSeries(std::move(c), order);
}

inline IntPoly random_poly(long max_degree, long bound = 5) {
  std::vector<Int> c(uniform(0, max_degree) + 1);
  for (auto& x : c) x = uniform(-bound, bound);
  return IntPoly(std::move(c));
}

inline std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace testing
