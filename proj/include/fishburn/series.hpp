#pragma once

// Dense truncated power series over Int or Rat.
//
// A series of order N stores exactly the coefficients of q^0..q^N; anything
// past q^N is unknown, not zero. Every operation reports the order up to
// which its result is reliable, so the unknown tail can never leak into a
// coefficient that looks valid.

#include "fishburn/error.hpp"
#include "fishburn/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fishburn {

template <Coefficient T>
class TruncatedSeries {
 public:
  using value_type = T;

  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Coefficients past `order` are dropped; missing ones are zero.
  TruncatedSeries(std::vector<T> coeffs, std::size_t order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  /// The polynomial 1 - q at the given order.
  static TruncatedSeries one_minus_q(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    if (order >= 1) s.coeffs_[1] = -1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      fail(ErrorCode::BadParams, "cannot extend a truncated series");
    }
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1),
                           order);
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<T> coeffs_;
};

using IntSeries = TruncatedSeries<Int>;
using RatSeries = TruncatedSeries<Rat>;

inline RatSeries promote(const IntSeries& s) {
  std::vector<Rat> c(s.coeffs().begin(), s.coeffs().end());
  return RatSeries(std::move(c), s.order());
}

template <Coefficient T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<T> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries<T>(std::move(c), order);
}

template <Coefficient T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<T> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = a[k] - b[k];
  return TruncatedSeries<T>(std::move(c), order);
}

template <Coefficient T>
TruncatedSeries<T> operator*(const T& scalar, const TruncatedSeries<T>& a) {
  std::vector<T> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= scalar;
  return TruncatedSeries<T>(std::move(c), a.order());
}

/// Cauchy product, reliable to min(order(a), order(b)).
template <Coefficient T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<T> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries<T>(std::move(c), order);
}

inline RatSeries series_mul(const IntSeries& a, const RatSeries& b) {
  return series_mul(promote(a), b);
}

inline RatSeries series_mul(const RatSeries& a, const IntSeries& b) {
  return series_mul(a, promote(b));
}

template <Coefficient T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series_mul(a, b);
}

/// Formal reciprocal. Over Int the constant term must be +-1, over Rat
/// nonzero; NonUnitConstantTerm otherwise.
template <Coefficient T>
TruncatedSeries<T> series_reciprocal(const TruncatedSeries<T>& a) {
  const T& c0 = a[0];
  bool unit = false;
  if constexpr (std::same_as<T, Int>) {
    unit = c0 == 1 || c0 == -1;
  } else {
    unit = c0 != 0;
  }
  if (!unit) fail(ErrorCode::NonUnitConstantTerm, "constant term is not invertible");

  const std::size_t order = a.order();
  std::vector<T> inv(order + 1);
  if constexpr (std::same_as<T, Int>) {
    inv[0] = c0;  // 1/(+-1) = +-1
  } else {
    inv[0] = 1 / c0;
  }
  for (std::size_t k = 1; k <= order; ++k) {
    T acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] != 0) acc += a[j] * inv[k - j];
    }
    inv[k] = -acc * inv[0];
  }
  return TruncatedSeries<T>(std::move(inv), order);
}

/// base^e. Negative exponents invert first, then raise to |e|.
template <Coefficient T>
TruncatedSeries<T> series_int_pow(const TruncatedSeries<T>& base, long e) {
  TruncatedSeries<T> b = e < 0 ? series_reciprocal(base) : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  TruncatedSeries<T> result = TruncatedSeries<T>::one(base.order());
  while (n > 0) {
    if (n & 1UL) result = series_mul(result, b);
    n >>= 1;
    if (n > 0) b = series_mul(b, b);
  }
  return result;
}

/// outer(inner(q)) for inner(0) = 0. The result is reliable only to
/// min(order(outer), order(inner)): outer's unknown tail feeds q^k for
/// k > order(outer). Polynomial outers go through the ExactPoly overload.
template <Coefficient T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer,
                                  const TruncatedSeries<T>& inner) {
  if (inner[0] != 0) {
    fail(ErrorCode::IllFormedComposition,
         "inner series has nonzero constant term and outer is not a polynomial");
  }
  const std::size_t order = std::min(outer.order(), inner.order());
  const TruncatedSeries<T> h = inner.truncated(order);
  TruncatedSeries<T> acc(order);
  for (std::size_t k = order + 1; k-- > 0;) {
    acc = series_mul(acc, h);
    std::vector<T> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer[k];
    acc = TruncatedSeries<T>(std::move(c), order);
  }
  return acc;
}

}  // namespace fishburn
