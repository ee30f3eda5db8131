#include "fishburn/fishburn.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string xi_string(const fb_xi* xi, long n) {
  size_t len = 0;
  fb_xi_value(xi, n, nullptr, 0, &len);
  std::string s(len + 1, '\0');
  REQUIRE(fb_xi_value(xi, n, s.data(), s.size(), &len) == FB_OK);
  s.resize(len);
  return s;
}

std::string describe(const fb_relation* rel) {
  char buf[256];
  size_t len = 0;
  REQUIRE(fb_relation_describe(rel, buf, sizeof buf, &len) == FB_OK);
  return std::string(buf, len);
}

}  // namespace

TEST_CASE("xi through the C interface") {
  fb_xi* xi = nullptr;
  REQUIRE(fb_xi_compute(1, 30, &xi) == FB_OK);
  CHECK(fb_xi_r(xi) == 1);
  CHECK(fb_xi_truncation(xi) == 30);
  CHECK(xi_string(xi, 5) == "53");
  CHECK(xi_string(xi, 8) == "5335");
  long m = -1;
  CHECK(fb_xi_value_mod(xi, 8, 7, &m) == FB_OK);
  CHECK(m == 5335 % 7);
  CHECK(fb_xi_value(xi, 31, nullptr, 0, nullptr) == FB_ERR_OUT_OF_RANGE);
  CHECK(fb_xi_value(xi, -1, nullptr, 0, nullptr) == FB_ERR_OUT_OF_RANGE);

  fb_xi* via_t = nullptr;
  REQUIRE(fb_xi_compute_via_t(30, &via_t) == FB_OK);
  CHECK(fb_xi_equal(xi, via_t) == 1);

  fb_xi* minus = nullptr;
  REQUIRE(fb_xi_compute(-1, 4, &minus) == FB_OK);
  CHECK(xi_string(minus, 4) == "5");
  CHECK(xi_string(minus, 3) == "-2");
  CHECK(fb_xi_equal(xi, minus) == 0);

  fb_xi* bar = nullptr;
  REQUIRE(fb_xi_bar_compute(5, 5, &bar) == FB_OK);
  CHECK(fb_xi_r(bar) == 5);
  CHECK(xi_string(bar, 5) == "101376");

  fb_xi_free(xi);
  fb_xi_free(via_t);
  fb_xi_free(minus);
  fb_xi_free(bar);
  fb_xi_free(nullptr);
  CHECK(fb_default_truncation(-1) == 500);
  CHECK(fb_default_truncation(3) == 200);
}

TEST_CASE("string buffers") {
  fb_xi* xi = nullptr;
  REQUIRE(fb_xi_compute(1, 20, &xi) == FB_OK);
  size_t len = 0;
  CHECK(fb_xi_value(xi, 20, nullptr, 0, &len) == FB_OK);
  CHECK(len == xi_string(xi, 20).size());
  char small[4];
  CHECK(fb_xi_value(xi, 20, small, sizeof small, &len) == FB_ERR_BUFFER_TOO_SMALL);
  CHECK(std::string(small) == xi_string(xi, 20).substr(0, 3));
  CHECK(fb_xi_value(xi, 20, nullptr, 5, &len) == FB_ERR_NULL_ARGUMENT);
  fb_xi_free(xi);
}

TEST_CASE("errors map to status codes") {
  fb_xi* xi = nullptr;
  CHECK(fb_xi_compute(0, 5, &xi) == FB_ERR_ZERO_R);
  CHECK(xi == nullptr);
  CHECK(std::string(fb_last_error()).size() > 0);
  CHECK(fb_xi_compute(1, -1, &xi) == FB_ERR_BAD_PARAMS);
  CHECK(fb_xi_compute(1, 5, nullptr) == FB_ERR_NULL_ARGUMENT);
  CHECK(fb_xi_bar_compute(9, 5, &xi) == FB_ERR_BAD_PARAMS);
  CHECK(std::string(fb_status_name(FB_ERR_NOT_IN_TSTAR)) == "NotInTStar");
  CHECK(std::string(fb_status_name(FB_OK)) == "OK");

  REQUIRE(fb_xi_compute(1, 10, &xi) == FB_OK);
  CHECK(std::string(fb_last_error()).empty());
  fb_report* rep = nullptr;
  CHECK(fb_verify_theorem(xi, 5, 0, 2, 10, 0, &rep) == FB_ERR_NOT_IN_TSTAR);
  CHECK(rep == nullptr);
  fb_relation_space* space = nullptr;
  CHECK(fb_relation_space_compute(xi, 5, 0, &space) == FB_ERR_INSUFFICIENT_DATA);
  CHECK(fb_relation_space_compute(xi, 5, 10, &space) == FB_ERR_BAD_PARAMS);
  fb_relation* rel = nullptr;
  const long three[] = {1, 2, 3};
  CHECK(fb_relation_make(5, 1, three, 3, &rel) == FB_ERR_DIMENSION_MISMATCH);
  fb_xi_free(xi);
}

TEST_CASE("residue sets") {
  fb_residue_set* set = nullptr;
  REQUIRE(fb_residue_set_make(FB_SET_T_STAR, 43, -1, 2, &set) == FB_OK);
  CHECK(fb_residue_set_size(set) == 1);
  CHECK(fb_residue_set_at(set, 0) == 42);
  CHECK(fb_residue_set_at(set, 1) == -1);
  CHECK(fb_residue_set_contains(set, 42) == 1);
  CHECK(fb_residue_set_vacuous(set) == 0);
  fb_residue_set_free(set);

  REQUIRE(fb_residue_set_make(FB_SET_S_STAR, 43, -1, 2, &set) == FB_OK);
  CHECK(fb_residue_set_size(set) == 21);
  fb_residue_set_free(set);

  REQUIRE(fb_residue_set_make(FB_SET_T, 11, 0, 0, &set) == FB_OK);
  CHECK(fb_residue_set_size(set) == 3);
  CHECK(fb_residue_set_at(set, 0) == 8);
  fb_residue_set_free(set);

  CHECK(fb_residue_set_make(FB_SET_S_STAR, 5, 10, 0, &set) == FB_ERR_BAD_PARAMS);
  CHECK(fb_residue_set_make(FB_SET_S, 6, 1, 0, &set) == FB_ERR_BAD_PARAMS);
  CHECK(fb_residue_set_make(static_cast<fb_set_kind>(9), 5, 1, 0, &set) == FB_ERR_BAD_PARAMS);
}

TEST_CASE("relations and the corollary family") {
  fb_relation_list* family = nullptr;
  REQUIRE(fb_corollary_family(7, 1, &family) == FB_OK);
  REQUIRE(fb_relation_list_size(family) == 4);
  const fb_relation* second = fb_relation_list_at(family, 1);
  CHECK(fb_relation_provenance(second) == FB_PROVENANCE_BINOMIAL);
  CHECK(fb_relation_s(second) == 2);
  CHECK(fb_relation_m(second) == 6);
  CHECK(fb_relation_coeff(second, 5) == 5);
  CHECK(describe(second) == "xi_1(7n+6) - 2 xi_1(7n+5) + xi_1(7n+4) = 0 (mod 7)");
  CHECK(fb_relation_list_at(family, 4) == nullptr);

  const long c[] = {0, 0, 0, 0, 1, -2, 1};
  fb_relation* rel = nullptr;
  REQUIRE(fb_relation_make(7, 1, c, 7, &rel) == FB_OK);
  CHECK(fb_relation_provenance(rel) == FB_PROVENANCE_EXPLICIT);
  CHECK(fb_relation_p(rel) == 7);
  CHECK(fb_relation_r(rel) == 1);
  int spans = 0;
  CHECK(fb_relation_list_spans(family, rel, &spans) == FB_OK);
  CHECK(spans == 1);
  fb_relation_free(rel);

  const long off[] = {1, 0, 0, 0, 0, 0, 0};
  REQUIRE(fb_relation_make(7, 1, off, 7, &rel) == FB_OK);
  CHECK(fb_relation_list_spans(family, rel, &spans) == FB_OK);
  CHECK(spans == 0);
  fb_relation_free(rel);

  REQUIRE(fb_relation_binomial(7, 1, 3, 6, &rel) == FB_OK);
  CHECK(fb_relation_list_spans(family, rel, &spans) == FB_OK);
  CHECK(spans == 1);
  fb_relation_free(rel);
  CHECK(fb_relation_binomial(7, 1, 5, 4, &rel) == FB_ERR_BAD_PARAMS);
  fb_relation_list_free(family);
}

TEST_CASE("relation space") {
  fb_xi* xi = nullptr;
  REQUIRE(fb_xi_compute(1, 199, &xi) == FB_OK);
  fb_relation_space* space = nullptr;
  REQUIRE(fb_relation_space_compute(xi, 5, 40, &space) == FB_OK);
  CHECK(fb_relation_space_p(space) == 5);
  CHECK(fb_relation_space_r(space) == 1);
  CHECK(fb_relation_space_dimension(space) == 3);
  CHECK(fb_relation_space_rows(space) == 40);
  CHECK(fb_relation_space_dimension_at(space, 1) == 4);
  CHECK(fb_relation_space_dimension_at(space, 40) == 3);
  CHECK(fb_relation_space_dimension_at(space, 41) == -1);
  CHECK(fb_relation_space_stabilized(space, 20) == 1);
  CHECK(fb_relation_space_last_change(space) <= 20);
  CHECK(fb_relation_space_basis(space, 2) != nullptr);
  CHECK(fb_relation_space_basis(space, 3) == nullptr);
  CHECK(fb_relation_provenance(fb_relation_space_basis(space, 0)) == FB_PROVENANCE_NULLSPACE);

  const long xcong5[] = {0, -2, 1, 0, 0};
  fb_relation* rel = nullptr;
  REQUIRE(fb_relation_make(5, 1, xcong5, 5, &rel) == FB_OK);
  int in = 0;
  CHECK(fb_relation_space_contains(space, rel, &in) == FB_OK);
  CHECK(in == 1);

  fb_relation_space* direct = nullptr;
  REQUIRE(fb_relation_space_compute_mod(5, 1, 40, &direct) == FB_OK);
  CHECK(fb_relation_space_dimension(direct) == 3);
  CHECK(fb_relation_space_contains(direct, rel, &in) == FB_OK);
  CHECK(in == 1);
  CHECK(fb_relation_space_compute_mod(5, 0, 40, &direct) == FB_ERR_ZERO_R);

  fb_relation* other = nullptr;
  const long seven[] = {1, 0, 0, 0, 0, 0, 0};
  REQUIRE(fb_relation_make(7, 1, seven, 7, &other) == FB_OK);
  CHECK(fb_relation_space_contains(space, other, &in) == FB_ERR_DIMENSION_MISMATCH);

  fb_relation_free(rel);
  fb_relation_free(other);
  fb_relation_space_free(space);
  fb_relation_space_free(direct);
  fb_xi_free(xi);
}

TEST_CASE("verification reports") {
  fb_xi* xi = nullptr;
  REQUIRE(fb_xi_compute(1, 500, &xi) == FB_OK);
  fb_report* rep = nullptr;
  REQUIRE(fb_verify_theorem(xi, 5, 0, 4, 500, 0, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  CHECK(fb_report_checks(rep) == 100);
  CHECK(fb_report_has_counterexample(rep) == 0);
  char buf[256];
  size_t len = 0;
  CHECK(fb_report_range(rep, buf, sizeof buf, &len) == FB_OK);
  CHECK(std::string(buf) == "n >= 0, 5n+4 <= 500");
  fb_report_free(rep);

  REQUIRE(fb_verify_theorem(xi, 5, 0, 2, 100, 1, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 0);
  CHECK(fb_report_has_counterexample(rep) == 1);
  CHECK(fb_report_counterexample(rep, buf, sizeof buf, &len) == FB_OK);
  CHECK(std::string(buf) == "n=0");
  fb_report_free(rep);

  fb_relation* rel = nullptr;
  REQUIRE(fb_relation_binomial(7, 1, 4, 6, &rel) == FB_OK);
  REQUIRE(fb_verify_relation(xi, rel, 500, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  fb_relation_free(rel);
  fb_xi_free(xi);

  REQUIRE(fb_verify_newxithm(7, 4, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  REQUIRE(fb_verify_apjid(5, 3, 2, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  REQUIRE(fb_verify_vanishing_lemma(5, 3, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  REQUIRE(fb_verify_alpha_stability(5, 3, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  REQUIRE(fb_verify_reconstruction(5, 24, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);

  const char* x[] = {"1/2", "-3", "4/7", "0", "5/3"};
  REQUIRE(fb_verify_a1id(5, "1/24", 0, x, 5, 4, &rep) == FB_OK);
  CHECK(fb_report_pass(rep) == 1);
  fb_report_free(rep);
  CHECK(fb_verify_a1id(5, "1/0", 0, x, 5, 4, &rep) == FB_ERR_BAD_PARAMS);
  CHECK(fb_verify_a1id(5, "1/24", 0, x, 3, 4, &rep) == FB_ERR_BAD_PARAMS);
  CHECK(fb_verify_apjid(5, 9, 2, &rep) == FB_ERR_BAD_PARAMS);
}

TEST_CASE("scalar helpers") {
  CHECK(fb_is_prime(43) == 1);
  CHECK(fb_is_prime(1) == 0);
  CHECK(fb_chi12(13) == 1);
  CHECK(fb_chi12(5) == -1);
  CHECK(fb_chi12(6) == 0);
  int l = 0;
  CHECK(fb_legendre(2, 7, &l) == FB_OK);
  CHECK(l == 1);
  CHECK(fb_legendre(5, 7, &l) == FB_OK);
  CHECK(l == -1);
  CHECK(fb_legendre(1, 8, &l) == FB_ERR_BAD_PARAMS);
  long i0 = 0;
  CHECK(fb_i0(23, &i0) == FB_OK);
  CHECK(i0 == 22);
  CHECK(fb_i0(4, &i0) == FB_ERR_BAD_PARAMS);
}
