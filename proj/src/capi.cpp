#include "fishburn/fishburn.h"

#include "fishburn/congruence.hpp"
#include "fishburn/dissection.hpp"
#include "fishburn/fishburn_series.hpp"
#include "fishburn/special_numbers.hpp"

#include <cstring>
#include <new>
#include <string>
#include <vector>

using namespace fishburn;

struct fb_xi {
  XiSequence seq;
};

struct fb_residue_set {
  ResidueSet set;
};

struct fb_relation {
  CongruenceRelation rel;
};

struct fb_relation_list {
  std::vector<fb_relation> items;
};

struct fb_relation_space {
  RelationSpace space;
  std::vector<fb_relation> basis;
};

struct fb_report {
  VerificationReport report;
};

namespace {

thread_local std::string last_error;

fb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParams: return FB_ERR_BAD_PARAMS;
    case ErrorCode::ZeroR: return FB_ERR_ZERO_R;
    case ErrorCode::NonUnitConstantTerm: return FB_ERR_NON_UNIT_CONSTANT_TERM;
    case ErrorCode::IllFormedComposition: return FB_ERR_ILL_FORMED_COMPOSITION;
    case ErrorCode::NonIntegralResult: return FB_ERR_NON_INTEGRAL_RESULT;
    case ErrorCode::InconsistentI0: return FB_ERR_INCONSISTENT_I0;
    case ErrorCode::NotInTStar: return FB_ERR_NOT_IN_TSTAR;
    case ErrorCode::InsufficientData: return FB_ERR_INSUFFICIENT_DATA;
    case ErrorCode::DimensionMismatch: return FB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::Internal: return FB_ERR_INTERNAL;
  }
  return FB_ERR_INTERNAL;
}

fb_status set_error(fb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
fb_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FB_ERR_INTERNAL, e.what());
  }
}

fb_status copy_string(const std::string& value, char* buf, size_t cap, size_t* len) {
  if (len) *len = value.size();
  if (buf == nullptr || cap == 0) {
    return cap == 0 && buf == nullptr ? FB_OK : set_error(FB_ERR_NULL_ARGUMENT, "null buffer");
  }
  const size_t n = std::min(value.size(), cap - 1);
  std::memcpy(buf, value.data(), n);
  buf[n] = '\0';
  return n == value.size() ? FB_OK : set_error(FB_ERR_BUFFER_TOO_SMALL, "buffer too small");
}

fb_status require_nonnegative(long v, const char* name) {
  if (v < 0) return set_error(FB_ERR_BAD_PARAMS, std::string(name) + " must be nonnegative");
  return FB_OK;
}

fb_status report_out(VerificationReport rep, fb_report** out) {
  *out = new fb_report{std::move(rep)};
  return FB_OK;
}

#define FB_REQUIRE(ptr)                                                   \
  do {                                                                    \
    if ((ptr) == nullptr) return set_error(FB_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* fb_status_name(fb_status status) {
  switch (status) {
    case FB_OK: return "OK";
    case FB_ERR_BAD_PARAMS: return "BadParams";
    case FB_ERR_ZERO_R: return "ZeroR";
    case FB_ERR_NON_UNIT_CONSTANT_TERM: return "NonUnitConstantTerm";
    case FB_ERR_ILL_FORMED_COMPOSITION: return "IllFormedComposition";
    case FB_ERR_NON_INTEGRAL_RESULT: return "NonIntegralResult";
    case FB_ERR_INCONSISTENT_I0: return "InconsistentI0";
    case FB_ERR_NOT_IN_TSTAR: return "NotInTStar";
    case FB_ERR_INSUFFICIENT_DATA: return "InsufficientData";
    case FB_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case FB_ERR_NULL_ARGUMENT: return "NullArgument";
    case FB_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case FB_ERR_OUT_OF_RANGE: return "OutOfRange";
    case FB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* fb_last_error(void) { return last_error.c_str(); }

// xi

fb_status fb_xi_compute(long r, long n_max, fb_xi** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(n_max, "n_max")) return st;
    *out = new fb_xi{xi_r(r, static_cast<std::size_t>(n_max))};
    return FB_OK;
  });
}

fb_status fb_xi_compute_via_t(long n_max, fb_xi** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(n_max, "n_max")) return st;
    *out = new fb_xi{xi_via_T(static_cast<std::size_t>(n_max))};
    return FB_OK;
  });
}

fb_status fb_xi_bar_compute(long p, long n_max, fb_xi** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(n_max, "n_max")) return st;
    XiBarSequence bar = xi_bar_p(p, static_cast<std::size_t>(n_max));
    *out = new fb_xi{XiSequence{bar.p, std::move(bar.values)}};
    return FB_OK;
  });
}

void fb_xi_free(fb_xi* xi) { delete xi; }

long fb_xi_r(const fb_xi* xi) { return xi ? xi->seq.r : 0; }

long fb_xi_truncation(const fb_xi* xi) {
  return xi ? static_cast<long>(xi->seq.truncation()) : -1;
}

fb_status fb_xi_value(const fb_xi* xi, long n, char* buf, size_t cap, size_t* len) {
  FB_REQUIRE(xi);
  return guarded([&] {
    if (n < 0 || n > static_cast<long>(xi->seq.truncation())) {
      return set_error(FB_ERR_OUT_OF_RANGE, "index outside the computed range");
    }
    return copy_string(to_string(xi->seq.values[n]), buf, cap, len);
  });
}

fb_status fb_xi_value_mod(const fb_xi* xi, long n, long m, long* out) {
  FB_REQUIRE(xi);
  FB_REQUIRE(out);
  return guarded([&] {
    if (n < 0 || n > static_cast<long>(xi->seq.truncation())) {
      return set_error(FB_ERR_OUT_OF_RANGE, "index outside the computed range");
    }
    *out = residue(xi->seq.values[n], m);
    return FB_OK;
  });
}

int fb_xi_equal(const fb_xi* a, const fb_xi* b) {
  return a && b && a->seq.values == b->seq.values ? 1 : 0;
}

long fb_default_truncation(long r) { return static_cast<long>(default_truncation(r)); }

// residue sets

fb_status fb_residue_set_make(fb_set_kind kind, long p, long r, long s, fb_residue_set** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    switch (kind) {
      case FB_SET_S: *out = new fb_residue_set{s_set(p)}; break;
      case FB_SET_T: *out = new fb_residue_set{t_set(p)}; break;
      case FB_SET_S_STAR: *out = new fb_residue_set{s_star(p, r, s)}; break;
      case FB_SET_T_STAR: *out = new fb_residue_set{t_star(p, r, s)}; break;
      default: return set_error(FB_ERR_BAD_PARAMS, "unknown set kind");
    }
    return FB_OK;
  });
}

void fb_residue_set_free(fb_residue_set* set) { delete set; }

size_t fb_residue_set_size(const fb_residue_set* set) { return set ? set->set.members.size() : 0; }

long fb_residue_set_at(const fb_residue_set* set, size_t index) {
  return set && index < set->set.members.size() ? set->set.members[index] : -1;
}

int fb_residue_set_contains(const fb_residue_set* set, long j) {
  return set && set->set.contains(j) ? 1 : 0;
}

int fb_residue_set_vacuous(const fb_residue_set* set) { return set && set->set.vacuous ? 1 : 0; }

// relations

fb_status fb_relation_make(long p, long r, const long* coeffs, size_t len, fb_relation** out) {
  FB_REQUIRE(coeffs);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = new fb_relation{CongruenceRelation::from_coeffs(p, r, std::vector<long>(coeffs, coeffs + len))};
    return FB_OK;
  });
}

fb_status fb_relation_binomial(long p, long r, long s, long m, fb_relation** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    *out = new fb_relation{CongruenceRelation::binomial(p, r, s, m)};
    return FB_OK;
  });
}

void fb_relation_free(fb_relation* rel) { delete rel; }

long fb_relation_p(const fb_relation* rel) { return rel ? rel->rel.p() : 0; }

long fb_relation_r(const fb_relation* rel) { return rel ? rel->rel.r() : 0; }

long fb_relation_coeff(const fb_relation* rel, size_t j) {
  return rel && j < rel->rel.coeffs().size() ? rel->rel.coeffs()[j] : -1;
}

fb_provenance fb_relation_provenance(const fb_relation* rel) {
  if (!rel) return FB_PROVENANCE_EXPLICIT;
  switch (rel->rel.provenance()) {
    case Provenance::Binomial: return FB_PROVENANCE_BINOMIAL;
    case Provenance::Nullspace: return FB_PROVENANCE_NULLSPACE;
    case Provenance::Explicit: return FB_PROVENANCE_EXPLICIT;
  }
  return FB_PROVENANCE_EXPLICIT;
}

long fb_relation_s(const fb_relation* rel) { return rel ? rel->rel.s() : -1; }

long fb_relation_m(const fb_relation* rel) { return rel ? rel->rel.m() : -1; }

fb_status fb_relation_describe(const fb_relation* rel, char* buf, size_t cap, size_t* len) {
  FB_REQUIRE(rel);
  return guarded([&] { return copy_string(rel->rel.describe(), buf, cap, len); });
}

fb_status fb_corollary_family(long p, long r, fb_relation_list** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    auto list = new fb_relation_list;
    try {
      for (auto& rel : corollary_family(p, r)) list->items.push_back(fb_relation{std::move(rel)});
    } catch (...) {
      delete list;
      throw;
    }
    *out = list;
    return FB_OK;
  });
}

void fb_relation_list_free(fb_relation_list* list) { delete list; }

size_t fb_relation_list_size(const fb_relation_list* list) { return list ? list->items.size() : 0; }

const fb_relation* fb_relation_list_at(const fb_relation_list* list, size_t index) {
  return list && index < list->items.size() ? &list->items[index] : nullptr;
}

fb_status fb_relation_list_spans(const fb_relation_list* list, const fb_relation* rel, int* out) {
  FB_REQUIRE(list);
  FB_REQUIRE(rel);
  FB_REQUIRE(out);
  return guarded([&] {
    std::vector<CongruenceRelation> basis;
    for (const auto& item : list->items) basis.push_back(item.rel);
    *out = in_span(basis, rel->rel) ? 1 : 0;
    return FB_OK;
  });
}

// relation space

fb_status fb_relation_space_compute(const fb_xi* xi, long p, long rows, fb_relation_space** out) {
  FB_REQUIRE(xi);
  FB_REQUIRE(out);
  return guarded([&] {
    if (rows < 1) return set_error(FB_ERR_INSUFFICIENT_DATA, "rows must be at least 1");
    auto space = new fb_relation_space{relation_space(xi->seq, p, static_cast<std::size_t>(rows)), {}};
    for (const auto& rel : space->space.basis) space->basis.push_back(fb_relation{rel});
    *out = space;
    return FB_OK;
  });
}

fb_status fb_relation_space_compute_mod(long p, long r, long rows, fb_relation_space** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (rows < 1) return set_error(FB_ERR_INSUFFICIENT_DATA, "rows must be at least 1");
    auto space = new fb_relation_space{relation_space(p, r, static_cast<std::size_t>(rows)), {}};
    for (const auto& rel : space->space.basis) space->basis.push_back(fb_relation{rel});
    *out = space;
    return FB_OK;
  });
}

void fb_relation_space_free(fb_relation_space* space) { delete space; }

long fb_relation_space_p(const fb_relation_space* space) { return space ? space->space.p : 0; }

long fb_relation_space_r(const fb_relation_space* space) { return space ? space->space.r : 0; }

long fb_relation_space_dimension(const fb_relation_space* space) {
  return space ? static_cast<long>(space->space.dimension) : -1;
}

long fb_relation_space_rows(const fb_relation_space* space) {
  return space ? static_cast<long>(space->space.rows_used) : -1;
}

long fb_relation_space_last_change(const fb_relation_space* space) {
  return space ? static_cast<long>(space->space.last_change_rows) : -1;
}

long fb_relation_space_dimension_at(const fb_relation_space* space, long rows) {
  if (!space || rows < 1 || rows > static_cast<long>(space->space.dimension_history.size())) return -1;
  return static_cast<long>(space->space.dimension_history[rows - 1]);
}

int fb_relation_space_stabilized(const fb_relation_space* space, long window) {
  return space && window >= 0 && space->space.stabilized(static_cast<std::size_t>(window)) ? 1 : 0;
}

const fb_relation* fb_relation_space_basis(const fb_relation_space* space, size_t index) {
  return space && index < space->basis.size() ? &space->basis[index] : nullptr;
}

fb_status fb_relation_space_contains(const fb_relation_space* space, const fb_relation* rel, int* out) {
  FB_REQUIRE(space);
  FB_REQUIRE(rel);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = membership(space->space, rel->rel) ? 1 : 0;
    return FB_OK;
  });
}

// reports

void fb_report_free(fb_report* report) { delete report; }

int fb_report_pass(const fb_report* report) { return report && report->report.pass ? 1 : 0; }

unsigned long long fb_report_checks(const fb_report* report) {
  return report ? report->report.checks : 0;
}

fb_status fb_report_claim(const fb_report* report, char* buf, size_t cap, size_t* len) {
  FB_REQUIRE(report);
  return copy_string(report->report.claim, buf, cap, len);
}

fb_status fb_report_range(const fb_report* report, char* buf, size_t cap, size_t* len) {
  FB_REQUIRE(report);
  return copy_string(report->report.range, buf, cap, len);
}

int fb_report_has_counterexample(const fb_report* report) {
  return report && report->report.counterexample ? 1 : 0;
}

fb_status fb_report_counterexample(const fb_report* report, char* buf, size_t cap, size_t* len) {
  FB_REQUIRE(report);
  return copy_string(report->report.counterexample.value_or(""), buf, cap, len);
}

fb_status fb_verify_theorem(const fb_xi* xi, long p, long s, long m, long nmax, int force,
                            fb_report** out) {
  FB_REQUIRE(xi);
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_theorem(xi->seq, p, s, m, static_cast<std::size_t>(nmax), force != 0), out);
  });
}

fb_status fb_verify_relation(const fb_xi* xi, const fb_relation* rel, long nmax, fb_report** out) {
  FB_REQUIRE(xi);
  FB_REQUIRE(rel);
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_relation(xi->seq, rel->rel, static_cast<std::size_t>(nmax)), out);
  });
}

fb_status fb_verify_newxithm(long p, long nmax, fb_report** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_newxithm(p, static_cast<unsigned>(nmax)), out);
  });
}

fb_status fb_verify_apjid(long p, long i, long nmax, fb_report** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_apjid(p, i, static_cast<unsigned>(nmax)), out);
  });
}

fb_status fb_verify_vanishing_lemma(long p, long nmax, fb_report** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_vanishing_lemma(p, static_cast<unsigned>(nmax)), out);
  });
}

fb_status fb_verify_alpha_stability(long p, long nmax, fb_report** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    return report_out(verify_alpha_stability(p, static_cast<unsigned>(nmax)), out);
  });
}

fb_status fb_verify_reconstruction(long p, long n, fb_report** out) {
  FB_REQUIRE(out);
  return guarded([&] {
    if (auto st = require_nonnegative(n, "n")) return st;
    return report_out(verify_reconstruction(p, static_cast<unsigned>(n)), out);
  });
}

fb_status fb_verify_a1id(long p, const char* z, long m, const char* const* x, size_t x_len,
                         long nmax, fb_report** out) {
  FB_REQUIRE(z);
  FB_REQUIRE(out);
  if (x_len > 0) FB_REQUIRE(x);
  return guarded([&] {
    if (auto st = require_nonnegative(nmax, "nmax")) return st;
    std::vector<Rat> xs;
    for (size_t k = 0; k < x_len; ++k) {
      if (x[k] == nullptr) return set_error(FB_ERR_NULL_ARGUMENT, "x entry is null");
      xs.push_back(parse_rat(x[k]));
    }
    return report_out(verify_a1id(p, parse_rat(z), m, xs, static_cast<unsigned>(nmax)), out);
  });
}

// scalars

int fb_is_prime(long n) { return is_prime(n) ? 1 : 0; }

int fb_chi12(long n) { return chi12(n); }

fb_status fb_legendre(long a, long p, int* out) {
  FB_REQUIRE(out);
  return guarded([&] {
    *out = legendre(a, p);
    return FB_OK;
  });
}

fb_status fb_i0(long p, long* out) {
  FB_REQUIRE(out);
  return guarded([&] {
    *out = i0_of(p).i0;
    return FB_OK;
  });
}

}  // extern "C"
