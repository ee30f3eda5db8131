#pragma once

// Residue sets, congruence checks against xi_r, the binomial relation family,
// and the empirically measured relation space over F_p.

#include "fishburn/fishburn_series.hpp"
#include "fishburn/report.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fishburn {

enum class SetKind { S, T, SStar, TStar };

const char* to_string(SetKind kind) noexcept;

struct ResidueSet {
  long p = 5;
  long r = 1;
  long s = 0;
  SetKind kind = SetKind::S;
  std::vector<long> members;  // sorted, within [0, p-1]
  /// T-type set built from an empty counterpart: every residue qualifies
  /// vacuously.
  bool vacuous = false;

  bool contains(long j) const;
};

/// Distinct values of n(3n-1)/2 mod p over n = 0..p-1, sorted.
std::vector<long> pentagonal_residues(long p);

ResidueSet s_set(long p);
ResidueSet t_set(long p);

/// j in S* iff j = r n(3n-1)/2 + s (mod p) for some n and 24(j-s) != -r (mod p).
/// BadParams if p | r or s is outside [0, p-1].
ResidueSet s_star(long p, long r, long s);
ResidueSet t_star(long p, long r, long s);

enum class Provenance { Binomial, Nullspace, Explicit };

const char* to_string(Provenance provenance) noexcept;

/// sum_j coeffs[j] xi_r(pn + j) = 0 (mod p) for all n >= 0.
class CongruenceRelation {
 public:
  /// coeffs[m-j] = (-1)^j binom(s,j) mod p for 0 <= j <= s. Needs s <= m <= p-1.
  static CongruenceRelation binomial(long p, long r, long s, long m);

  /// Reduces entries mod p. BadParams for a zero vector or p | r;
  /// DimensionMismatch if coeffs.size() != p.
  static CongruenceRelation from_coeffs(long p, long r, std::vector<long> coeffs,
                                        Provenance provenance = Provenance::Explicit);

  long p() const noexcept { return p_; }
  long r() const noexcept { return r_; }
  std::span<const long> coeffs() const noexcept { return coeffs_; }
  Provenance provenance() const noexcept { return provenance_; }
  /// Binomial provenance only; -1 otherwise.
  long s() const noexcept { return s_; }
  long m() const noexcept { return m_; }

  /// e.g. "xi_1(7n+6) - 2 xi_1(7n+5) + xi_1(7n+4) = 0 (mod 7)"
  std::string describe() const;

  bool operator==(const CongruenceRelation&) const = default;

 private:
  CongruenceRelation(long p, long r, std::vector<long> coeffs, Provenance provenance, long s,
                     long m)
      : p_(p), r_(r), coeffs_(std::move(coeffs)), provenance_(provenance), s_(s), m_(m) {}

  long p_;
  long r_;
  std::vector<long> coeffs_;
  Provenance provenance_;
  long s_;
  long m_;
};

/// sum_{j=0}^{s} binom(s,j) (-1)^j xi_r(pn+m-j) = 0 (mod p) for all n with
/// pn+m <= nmax, r taken from xi. NotInTStar unless m is in T*(p,r,s) or
/// `force` is set.
VerificationReport verify_theorem(const XiSequence& xi, long p, long s, long m,
                                  std::size_t nmax, bool force = false);

/// Checks rel for every n with pn+p-1 <= nmax. BadParams if rel.r() != xi.r.
VerificationReport verify_relation(const XiSequence& xi, const CongruenceRelation& rel,
                                   std::size_t nmax);

/// The (p+1)/2 relations with m = p-1 and s in [0, p-2] such that
/// (-24(1+s) rbar + 1 / p) is -1 or 0. Internal error if their F_p rank is
/// not (p+1)/2.
std::vector<CongruenceRelation> corollary_family(long p, long r);

/// Rank over F_p of the given vectors (entries need not be reduced).
std::size_t fp_rank(std::span<const std::vector<long>> rows, long p);

/// Right nullspace of M[n][j] = xi_r(pn+j) mod p, n < rows. The dimension is
/// an upper bound on the true relation space and never grows with more rows.
struct RelationSpace {
  long p = 5;
  long r = 1;
  std::size_t rows_used = 0;
  std::vector<CongruenceRelation> basis;
  std::size_t dimension = 0;
  /// dimension_history[k] = dimension after k+1 rows.
  std::vector<std::size_t> dimension_history;
  /// Row count at which the dimension last dropped (0 if it never did).
  std::size_t last_change_rows = 0;

  std::size_t conjectured_dimension() const noexcept { return static_cast<std::size_t>(p + 1) / 2; }

  /// True when the dimension has not changed over the last `window` rows.
  bool stabilized(std::size_t window = 20) const noexcept {
    return rows_used >= last_change_rows + window;
  }
};

/// InsufficientData if rows < 1; BadParams if xi does not reach p*rows - 1.
RelationSpace relation_space(const XiSequence& xi, long p, std::size_t rows);

/// Same space from xi_r mod p computed directly in F_p; no big integers.
RelationSpace relation_space(long p, long r, std::size_t rows);

/// rel lies in the F_p span of space.basis. DimensionMismatch on a different p.
bool membership(const RelationSpace& space, const CongruenceRelation& rel);

/// rel lies in the F_p span of `basis` (all of the same p).
bool in_span(std::span<const CongruenceRelation> basis, const CongruenceRelation& rel);

}  // namespace fishburn
