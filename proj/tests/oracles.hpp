#pragma once

#include "fishburn/exact.hpp"
#include "fishburn/series.hpp"

#include <vector>

namespace testing {

inline fishburn::RatSeries exp_series(const fishburn::Rat& c, std::size_t order) {
  using fishburn::Rat;
  std::vector<Rat> v(order + 1);
  Rat term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    v[k] = term;
    term = term * c / Rat(static_cast<long>(k + 1));
  }
  return fishburn::RatSeries(std::move(v), order);
}

// T_k read off e^{t/24} sum_n (1-e^t)...(1-e^{nt}) = sum_k T_k/k! (-t/24)^k.
// Each factor has t-order 1, so n <= order suffices.
inline std::vector<fishburn::Int> glaisher_from_expansion(std::size_t order) {
  using namespace fishburn;
  RatSeries sum = RatSeries::one(order);
  RatSeries prod = RatSeries::one(order);
  for (std::size_t n = 1; n <= order; ++n) {
    prod = series_mul(prod, RatSeries::one(order) - exp_series(Rat(static_cast<long>(n)), order));
    sum = sum + prod;
  }
  sum = series_mul(sum, exp_series(Rat(1, 24), order));
  std::vector<Int> t(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    const Rat v = sum[k] * Rat(factorial(k)) * Rat(power(Int(-24), k));
    t[k] = to_integer(v, "expansion oracle");
  }
  return t;
}

}  // namespace testing
