#include "fishburn/poly.hpp"

namespace fishburn {

std::vector<Int> substitute_one_minus(const IntPoly& p, std::size_t kmax) {
  std::vector<Int> acc(kmax + 1);
  const auto c = p.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) {
    // acc <- acc * (1 - q) + c_j
    for (std::size_t k = kmax; k >= 1; --k) acc[k] -= acc[k - 1];
    acc[0] += c[j];
  }
  return acc;
}

IntPoly substitute_one_minus(const IntPoly& p) {
  if (p.is_zero()) return {};
  return IntPoly(substitute_one_minus(p, static_cast<std::size_t>(p.degree())));
}

}  // namespace fishburn
