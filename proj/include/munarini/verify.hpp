#pragma once

// Property suites behind `munarini verify`. Each check compares a formula
// or structural claim with a computation that does not depend on it.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "munarini/graphs.hpp"

namespace munarini {

enum class Suite { Isometry, Daisy, Median, Identities, Oracle, All };

std::string_view suite_name(Suite suite);
/// Throws InputError for an unknown name.
Suite parse_suite(std::string_view name);

struct CheckResult {
  std::string suite;
  std::string name;
  FamilyParams params;
  bool passed = false;
  /// Witness or mismatch description when the check fails.
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Library operations called while running the checks.
  std::set<std::string> exercised;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Library operations a full run is expected to touch.
const std::vector<std::string>& library_operations();

/// Runs `suite` on M_{n,k} (and the related families) for every
/// 0 <= n <= n_max, 1 <= k <= k_max.
VerifyReport verify_bounds(Suite suite, std::size_t n_max, unsigned k_max);

/// Runs `suite` on a single graph. Isometry, daisy and median act on the
/// given graph; identities and oracle act on M_{n,k} for the same n, k.
VerifyReport verify_instance(Suite suite, const FamilyParams& params);

}  // namespace munarini
