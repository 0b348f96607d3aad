#ifndef G2AA_REPRODUCE_HPP
#define G2AA_REPRODUCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace g2aa {

/// One golden comparison: the reference value against the computed one.
struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  /// Name of the first failing check, empty if all pass.
  std::string first_failure() const;
};

struct ReproduceOptions {
  int sweep_bound = 2;
  std::size_t sweep_points = 500;
  std::uint64_t seed = 20241015;
};

/// table1, example_a, example_b, stabilizers, witt, g2metric, sweep, calibrated.
const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all"; throws DomainError for unknown names.
std::vector<SuiteReport> reproduce(std::string_view which, const ReproduceOptions& opts = {});

}  // namespace g2aa

#endif  // G2AA_REPRODUCE_HPP
