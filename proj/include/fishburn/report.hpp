#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fishburn {

/// Outcome of checking one claim over a finite range.
struct VerificationReport {
  std::string claim;
  std::string range;
  bool pass = true;
  std::uint64_t checks = 0;  // number of individual equalities/congruences tested
  std::optional<std::string> counterexample;

  /// Records a failure; only the first counterexample is kept.
  void record_failure(std::string what) {
    pass = false;
    if (!counterexample) counterexample = std::move(what);
  }
};

}  // namespace fishburn
