#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace recstat::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when the check fails
};

enum class Suite { core, bounds, scaling, temme };

std::string_view to_string(Suite suite) noexcept;

/// "core", "bounds", "scaling", "temme" or "all".
std::optional<std::vector<Suite>> parse_suites(std::string_view text);

/// Runs one suite. Every check restricts itself to sizes n <= max_n; checks
/// whose smallest meaningful size exceeds max_n are omitted.
std::vector<CheckResult> run_suite(Suite suite, int max_n);

/// Runs several suites on up to `threads` workers. Results are concatenated
/// in the order of `suites` regardless of completion order.
std::vector<CheckResult> run_suites(std::span<const Suite> suites, int max_n, unsigned threads);

/// RECSTAT_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
unsigned configured_threads();

}  // namespace recstat::verify
