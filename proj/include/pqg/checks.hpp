#pragma once

// The invariant suite behind `pqg check`: every module property, run with a
// seeded generator, reporting pass/fail/skip and the worst observed error.

#include <cstdint>
#include <string>
#include <vector>

#include "pqg/intrinsic_algebra.hpp"
#include "pqg/polarization.hpp"
#include "pqg/rng.hpp"

namespace pqg {

struct RunConfig {
  int n = 1;
  double hbar = 1.0;
  int cutoff = 6;
  int quad_order = 40;
  enum class Format { json, csv } format = Format::json;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  double max_error = 0.0;
  std::string note;
};

const char* to_string(CheckStatus s);

std::vector<CheckResult> run_all_checks(const RunConfig& rc);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pqg
