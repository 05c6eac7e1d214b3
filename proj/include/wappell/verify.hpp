#pragma once

#include <string>
#include <vector>

#include "wappell/appell.hpp"

namespace wappell {

struct VerifyOptions {
  int max_size = 6;  // largest partition size swept
  int k_max = 4;     // largest rim-hook size for the indexed identities
};

struct SuiteResult {
  std::string name;
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Names accepted by run_verify, excluding "all", in canonical run order.
const std::vector<std::string>& suite_names();

// Runs one named identity suite against the spec. Spec-independent suites
// (newton-schur, hook-formula, mn-rule, dual-jacobi-trudi) ignore the spec's
// values but keep the interface uniform. Unknown names throw
// std::invalid_argument.
SuiteResult run_suite(const std::string& name, const AppellSpec& spec,
                      const VerifyOptions& options);

// Runs the named suite, or every suite for "all", in canonical order.
std::vector<SuiteResult> run_verify(const std::string& identity,
                                    const AppellSpec& spec,
                                    const VerifyOptions& options);

}  // namespace wappell
