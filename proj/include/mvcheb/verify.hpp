#pragma once

#include <string>
#include <vector>

#include "mvcheb/rational.hpp"

namespace mvcheb::verify {

struct CaseResult {
  std::string caseId;
  std::string params;
  bool pass = false;
  std::string witness;  // first differing exact entry, when available
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseResult> cases;  // sorted by caseId
  long long elapsedMs = 0;

  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

struct Options {
  int twoLMax = 4;
  int degreeMax = 4;
  Rational alpha = Rational(1, 3);
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one named suite; cases execute in parallel bounded by MVCHEB_THREADS.
VerifyReport run_suite(const std::string& name, const Options& opts);

/// Every suite in canonical order.
std::vector<VerifyReport> run_all(const Options& opts);

}  // namespace mvcheb::verify
