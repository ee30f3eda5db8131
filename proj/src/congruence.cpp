#include "fishburn/congruence.hpp"

#include "fishburn/special_numbers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fishburn {

namespace {

// Reduced row echelon form over F_p, grown one row at a time. Pivot is the
// first nonzero entry of each reduced row.
class FpEchelon {
 public:
  FpEchelon(long p, std::size_t width) : p_(p), width_(width) {}

  /// Returns true if the row was independent of those already inserted.
  bool insert(std::vector<long> row) {
    for (auto& x : row) x = residue(x, p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(row, rows_[k], pivots_[k]);
    const auto it = std::find_if(row.begin(), row.end(), [](long x) { return x != 0; });
    if (it == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const long inv = inverse_mod(row[pivot], p_);
    for (auto& x : row) x = static_cast<long>(static_cast<long long>(x) * inv % p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(rows_[k], row, pivot);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

  std::vector<std::vector<long>> nullspace() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (std::size_t f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<long> v(width_, 0);
      v[f] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = residue(-rows_[k][f], p_);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void eliminate(std::vector<long>& target, const std::vector<long>& row, std::size_t pivot) const {
    const long factor = target[pivot];
    if (factor == 0) return;
    for (std::size_t c = 0; c < width_; ++c) {
      target[c] = residue(target[c] - static_cast<long>(static_cast<long long>(factor) * row[c] % p_), p_);
    }
  }

  long p_;
  std::size_t width_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::size_t> pivots_;
};

void check_star_params(long p, long r, long s) {
  require_prime_ge5(p);
  if (r == 0 || r % p == 0) fail(ErrorCode::BadParams, "r must be nonzero and prime to p");
  if (s < 0 || s >= p) fail(ErrorCode::BadParams, "s must lie in [0, p-1]");
}

ResidueSet above_max(const ResidueSet& counterpart, SetKind kind) {
  ResidueSet t{counterpart.p, counterpart.r, counterpart.s, kind, {}, counterpart.members.empty()};
  const long start = counterpart.members.empty() ? 0 : counterpart.members.back() + 1;
  for (long k = start; k < counterpart.p; ++k) t.members.push_back(k);
  return t;
}

std::string xi_name(long r) { return "xi_" + std::to_string(r); }

}  // namespace

const char* to_string(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::S: return "S";
    case SetKind::T: return "T";
    case SetKind::SStar: return "S*";
    case SetKind::TStar: return "T*";
  }
  return "?";
}

const char* to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::Binomial: return "binomial";
    case Provenance::Nullspace: return "nullspace";
    case Provenance::Explicit: return "explicit";
  }
  return "?";
}

bool ResidueSet::contains(long j) const {
  return std::binary_search(members.begin(), members.end(), j);
}

std::vector<long> pentagonal_residues(long p) {
  std::set<long> seen;
  for (long n = 0; n < p; ++n) seen.insert(residue(n * (3 * n - 1) / 2, p));
  return {seen.begin(), seen.end()};
}

ResidueSet s_set(long p) {
  require_prime_ge5(p);
  return ResidueSet{p, 1, 0, SetKind::S, pentagonal_residues(p), false};
}

ResidueSet t_set(long p) { return above_max(s_set(p), SetKind::T); }

ResidueSet s_star(long p, long r, long s) {
  check_star_params(p, r, s);
  std::set<long> members;
  for (long pent : pentagonal_residues(p)) {
    const long j = residue(r * pent + s, p);
    if (residue(24 * (j - s) + r, p) != 0) members.insert(j);
  }
  return ResidueSet{p, r, s, SetKind::SStar, {members.begin(), members.end()}, false};
}

ResidueSet t_star(long p, long r, long s) { return above_max(s_star(p, r, s), SetKind::TStar); }

CongruenceRelation CongruenceRelation::binomial(long p, long r, long s, long m) {
  check_star_params(p, r, s);
  if (m < s || m >= p) fail(ErrorCode::BadParams, "binomial relation needs s <= m <= p-1");
  std::vector<long> c(p, 0);
  for (long j = 0; j <= s; ++j) {
    const long b = residue(fishburn::binomial(s, j), p);
    c[m - j] = residue(j % 2 == 0 ? b : -b, p);
  }
  return CongruenceRelation(p, r, std::move(c), Provenance::Binomial, s, m);
}

CongruenceRelation CongruenceRelation::from_coeffs(long p, long r, std::vector<long> coeffs,
                                                   Provenance provenance) {
  if (p < 2 || !is_prime(p)) fail(ErrorCode::BadParams, "p must be prime");
  if (r == 0 || r % p == 0) fail(ErrorCode::BadParams, "r must be nonzero and prime to p");
  if (coeffs.size() != static_cast<std::size_t>(p)) {
    fail(ErrorCode::DimensionMismatch, "relation needs exactly p coefficients");
  }
  for (auto& c : coeffs) c = residue(c, p);
  if (std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; })) {
    fail(ErrorCode::BadParams, "zero relation vector");
  }
  return CongruenceRelation(p, r, std::move(coeffs), provenance, -1, -1);
}

std::string CongruenceRelation::describe() const {
  std::ostringstream os;
  bool first = true;
  for (long j = p_ - 1; j >= 0; --j) {
    if (coeffs_[j] == 0) continue;
    Int c = coeffs_[j];
    if (provenance_ == Provenance::Binomial) {
      // print the integer binomial weight, not its residue
      c = fishburn::binomial(s_, m_ - j);
      if ((m_ - j) % 2 == 1) c = -c;
    } else if (coeffs_[j] > p_ / 2) {
      c -= p_;
    }
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int a = abs(c);
    if (a != 1) os << a << " ";
    os << xi_name(r_) << "(" << p_ << "n+" << j << ")";
    first = false;
  }
  os << " = 0 (mod " << p_ << ")";
  return os.str();
}

VerificationReport verify_theorem(const XiSequence& xi, long p, long s, long m,
                                  std::size_t nmax, bool force) {
  const ResidueSet tstar = t_star(p, xi.r, s);
  if (m < 0 || m >= p) fail(ErrorCode::BadParams, "m must lie in [0, p-1]");
  if (!force && !tstar.contains(m)) {
    fail(ErrorCode::NotInTStar, std::to_string(m) + " is not in T*(" + std::to_string(p) + "," +
                                    std::to_string(xi.r) + "," + std::to_string(s) + ")");
  }
  if (nmax > xi.truncation()) fail(ErrorCode::BadParams, "nmax exceeds the xi truncation");

  VerificationReport rep;
  rep.claim = "sum_{j<=" + std::to_string(s) + "} binom(" + std::to_string(s) + ",j)(-1)^j " +
              xi_name(xi.r) + "(" + std::to_string(p) + "n+" + std::to_string(m) +
              "-j) = 0 (mod " + std::to_string(p) + ")";
  rep.range = "n >= 0, " + std::to_string(p) + "n+" + std::to_string(m) + " <= " + std::to_string(nmax);

  std::vector<Int> weights(s + 1);
  for (long j = 0; j <= s; ++j) weights[j] = j % 2 == 0 ? binomial(s, j) : Int(-binomial(s, j));
  for (long n = 0; p * n + m <= static_cast<long>(nmax); ++n) {
    Int acc = 0;
    for (long j = 0; j <= s; ++j) acc += weights[j] * xi.at(p * n + m - j);
    ++rep.checks;
    if (residue(acc, p) != 0) rep.record_failure("n=" + std::to_string(n));
  }
  return rep;
}

VerificationReport verify_relation(const XiSequence& xi, const CongruenceRelation& rel,
                                   std::size_t nmax) {
  if (rel.r() != xi.r) fail(ErrorCode::BadParams, "relation and sequence have different r");
  if (nmax > xi.truncation()) fail(ErrorCode::BadParams, "nmax exceeds the xi truncation");
  const long p = rel.p();
  VerificationReport rep;
  rep.claim = rel.describe();
  rep.range = "n >= 0, " + std::to_string(p) + "n+" + std::to_string(p - 1) + " <= " + std::to_string(nmax);
  for (long n = 0; p * n + p - 1 <= static_cast<long>(nmax); ++n) {
    long acc = 0;
    for (long j = 0; j < p; ++j) {
      if (rel.coeffs()[j] == 0) continue;
      acc = residue(acc + rel.coeffs()[j] * residue(xi.at(p * n + j), p), p);
    }
    ++rep.checks;
    if (acc != 0) rep.record_failure("n=" + std::to_string(n));
  }
  return rep;
}

std::vector<CongruenceRelation> corollary_family(long p, long r) {
  check_star_params(p, r, 0);
  const long rbar = inverse_mod(r, p);
  std::vector<CongruenceRelation> family;
  for (long s = 0; s <= p - 2; ++s) {
    const long a = residue(-24 * (1 + s) % p * rbar + 1, p);
    if (legendre(a, p) <= 0) family.push_back(CongruenceRelation::binomial(p, r, s, p - 1));
  }
  std::vector<std::vector<long>> rows;
  for (const auto& rel : family) rows.emplace_back(rel.coeffs().begin(), rel.coeffs().end());
  const std::size_t expected = static_cast<std::size_t>(p + 1) / 2;
  if (family.size() != expected || fp_rank(rows, p) != expected) {
    fail(ErrorCode::Internal, "corollary family is not (p+1)/2 independent relations");
  }
  return family;
}

std::size_t fp_rank(std::span<const std::vector<long>> rows, long p) {
  if (rows.empty()) return 0;
  FpEchelon ech(p, rows.front().size());
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) fail(ErrorCode::DimensionMismatch, "ragged rows");
    ech.insert(row);
  }
  return ech.rank();
}

namespace {

// residues[k] = xi_r(k) mod p for k <= p*rows - 1
RelationSpace space_from_residues(long p, long r, std::size_t rows,
                                  const std::vector<long>& residues) {
  RelationSpace space;
  space.p = p;
  space.r = r;
  space.rows_used = rows;
  FpEchelon ech(p, static_cast<std::size_t>(p));
  for (std::size_t n = 0; n < rows; ++n) {
    const auto first = residues.begin() + static_cast<long>(n * p);
    if (ech.insert(std::vector<long>(first, first + p))) space.last_change_rows = n + 1;
    space.dimension_history.push_back(static_cast<std::size_t>(p) - ech.rank());
  }
  for (auto& v : ech.nullspace()) {
    space.basis.push_back(CongruenceRelation::from_coeffs(p, r, std::move(v), Provenance::Nullspace));
  }
  space.dimension = space.basis.size();
  return space;
}

void check_space_params(long p, long r, std::size_t rows) {
  require_prime_ge5(p);
  if (rows < 1) fail(ErrorCode::InsufficientData, "relation_space needs at least one row");
  if (r == 0) fail(ErrorCode::ZeroR, "relation_space: r must be nonzero");
  if (r % p == 0) fail(ErrorCode::BadParams, "r must be prime to p");
}

}  // namespace

RelationSpace relation_space(const XiSequence& xi, long p, std::size_t rows) {
  check_space_params(p, xi.r, rows);
  const std::size_t need = static_cast<std::size_t>(p) * rows - 1;
  if (need > xi.truncation()) {
    fail(ErrorCode::BadParams, "xi truncation " + std::to_string(xi.truncation()) +
                                   " is below the needed index " + std::to_string(need));
  }
  std::vector<long> residues(need + 1);
  for (std::size_t k = 0; k <= need; ++k) residues[k] = residue(xi.values[k], p);
  return space_from_residues(p, xi.r, rows, residues);
}

RelationSpace relation_space(long p, long r, std::size_t rows) {
  check_space_params(p, r, rows);
  const std::size_t need = static_cast<std::size_t>(p) * rows - 1;
  return space_from_residues(p, r, rows, xi_r_mod(r, need, p));
}

bool in_span(std::span<const CongruenceRelation> basis, const CongruenceRelation& rel) {
  const long p = rel.p();
  FpEchelon ech(p, static_cast<std::size_t>(p));
  for (const auto& b : basis) {
    if (b.p() != p) fail(ErrorCode::DimensionMismatch, "basis vectors have a different p");
    ech.insert({b.coeffs().begin(), b.coeffs().end()});
  }
  return !ech.insert({rel.coeffs().begin(), rel.coeffs().end()});
}

bool membership(const RelationSpace& space, const CongruenceRelation& rel) {
  if (rel.p() != space.p || rel.coeffs().size() != static_cast<std::size_t>(space.p)) {
    fail(ErrorCode::DimensionMismatch, "relation and space have different p");
  }
  return in_span(space.basis, rel);
}

}  // namespace fishburn
