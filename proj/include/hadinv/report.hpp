#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hadinv {

/// One named check, aggregated over any number of samples. The reported
/// residual/tolerance pair is the sample with the largest residual/tolerance
/// ratio.
struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  double ratio() const noexcept;
};

/// Named residuals with pass/fail against their tolerances.
class VerificationReport {
 public:
  /// Records one sample; passes iff residual <= tolerance (NaN fails).
  void record(std::string_view name, double residual, double tolerance);
  /// Records a boolean fact as residual 0 (true) or 1 (false) against tolerance 0.
  void record_flag(std::string_view name, bool ok);
  void merge(const VerificationReport& other);

  bool passed() const noexcept;
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  const CheckResult* find(std::string_view name) const noexcept;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace hadinv
