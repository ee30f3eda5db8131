#pragma once

// Exact integer and rational scalars. Everything numeric in the library is
// built on these two types; there is no floating point anywhere.

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace fishburn {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
concept Coefficient = std::same_as<T, Int> || std::same_as<T, Rat>;

/// Rational in lowest terms with positive denominator. `den == 0` is BadParams.
Rat make_rat(const Int& num, const Int& den);

bool is_integral(const Rat& x);

/// Numerator of an integral rational; NonIntegralResult otherwise.
Int to_integer(const Rat& x, std::string_view context);

Int factorial(unsigned long n);

/// binom(n, k) for any integer n and k >= 0 (negative n via the usual
/// falling-factorial definition). Zero for k < 0.
Int binomial(long n, long k);

/// a(a-1)...(a-k+1)/k! for rational a.
Rat rational_binom(const Rat& a, unsigned long k);

Int power(const Int& base, unsigned long e);
Rat power(const Rat& base, unsigned long e);

/// Least nonnegative residue of x mod m, m > 0.
long residue(const Int& x, long m);
long residue(long x, long m);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

/// Accepts "a", "-a", "a/b"; BadParams on anything else or b = 0.
Rat parse_rat(std::string_view text);

}  // namespace fishburn
