#include "fishburn/exact.hpp"

#include "fishburn/error.hpp"

#include <cctype>

namespace fishburn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ZeroR: return "ZeroR";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::IllFormedComposition: return "IllFormedComposition";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::InconsistentI0: return "InconsistentI0";
    case ErrorCode::NotInTStar: return "NotInTStar";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::BadParams, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

Int to_integer(const Rat& x, std::string_view context) {
  if (!is_integral(x)) {
    fail(ErrorCode::NonIntegralResult,
         std::string(context) + ": expected an integer, got " + to_string(x));
  }
  return x.get_num();
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(long n, long k) {
  if (k < 0) return 0;
  Int r;
  Int top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rat rational_binom(const Rat& a, unsigned long k) {
  Rat r(1);
  for (unsigned long i = 0; i < k; ++i) {
    r *= a - Rat(static_cast<long>(i));
    r /= Rat(static_cast<long>(i + 1));
  }
  return r;
}

Int power(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat power(const Rat& base, unsigned long e) {
  return make_rat(power(Int(base.get_num()), e), power(Int(base.get_den()), e));
}

long residue(const Int& x, long m) {
  if (m <= 0) fail(ErrorCode::BadParams, "modulus must be positive");
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

long residue(long x, long m) {
  if (m <= 0) fail(ErrorCode::BadParams, "modulus must be positive");
  long r = x % m;
  return r < 0 ? r + m : r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    fail(ErrorCode::BadParams, "not a rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  return make_rat(Int(strip_plus(num)), Int(strip_plus(den)));
}

}  // namespace fishburn
