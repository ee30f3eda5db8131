#pragma once

// Exact univariate polynomials and substitution into series/polynomials.

#include "fishburn/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fishburn {

template <Coefficient T>
class ExactPoly {
 public:
  ExactPoly() = default;

  explicit ExactPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ExactPoly constant(const T& c) { return ExactPoly(std::vector<T>{c}); }

  static ExactPoly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1);
    v[degree] = c;
    return ExactPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  std::span<const T> coeffs() const noexcept { return c_; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  template <Coefficient U>
    requires std::same_as<T, U> || std::same_as<U, Rat>
  U operator()(const U& x) const {
    U acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= x;
      acc += U(c_[k]);
    }
    return acc;
  }

  ExactPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return ExactPoly(std::move(d));
  }

  ExactPoly derivative(unsigned times) const {
    ExactPoly r = *this;
    for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = r.derivative();
    return r;
  }

  TruncatedSeries<T> to_series(std::size_t order) const {
    return TruncatedSeries<T>(c_, order);
  }

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return ExactPoly(std::move(c));
  }

  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return ExactPoly(std::move(c));
  }

  friend ExactPoly operator-(const ExactPoly& a) { return ExactPoly() - a; }

  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ExactPoly(std::move(c));
  }

  friend ExactPoly operator*(const T& s, const ExactPoly& a) {
    std::vector<T> c(a.c_);
    for (auto& x : c) x *= s;
    return ExactPoly(std::move(c));
  }

  bool operator==(const ExactPoly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = ExactPoly<Int>;
using RatPoly = ExactPoly<Rat>;

inline RatPoly promote(const IntPoly& p) {
  return RatPoly(std::vector<Rat>(p.coeffs().begin(), p.coeffs().end()));
}

/// outer(inner(x)) by Horner.
template <Coefficient T>
ExactPoly<T> compose(const ExactPoly<T>& outer, const ExactPoly<T>& inner) {
  ExactPoly<T> acc;
  const auto c = outer.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * inner + ExactPoly<T>::constant(c[k]);
  return acc;
}

/// Polynomial outer: substitution is exact for any inner, so the result keeps
/// the order of inner.
template <Coefficient T>
TruncatedSeries<T> series_compose(const ExactPoly<T>& outer, const TruncatedSeries<T>& inner) {
  const std::size_t order = inner.order();
  TruncatedSeries<T> acc(order);
  const auto c = outer.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = series_mul(acc, inner);
    std::vector<T> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += c[k];
    acc = TruncatedSeries<T>(std::move(v), order);
  }
  return acc;
}

/// Coefficients of P(1 - q) up to q^kmax (binomial transform). Synthetic
/// substitution: Horner in (1 - q), so only additions on the integer path.
std::vector<Int> substitute_one_minus(const IntPoly& p, std::size_t kmax);

/// P(1 - q) as an exact polynomial.
IntPoly substitute_one_minus(const IntPoly& p);

}  // namespace fishburn
