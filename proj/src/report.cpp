#include "hadinv/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hadinv {

double CheckResult::ratio() const noexcept {
  if (std::isnan(residual)) return std::numeric_limits<double>::infinity();
  if (tolerance > 0.0) return residual / tolerance;
  return residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

void VerificationReport::record(std::string_view name, double residual, double tolerance) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  CheckResult sample{std::string(name), 1, residual, tolerance, residual <= tolerance};
  if (it == checks_.end()) {
    checks_.push_back(std::move(sample));
    return;
  }
  it->samples += 1;
  it->pass = it->pass && sample.pass;
  if (sample.ratio() > it->ratio()) {
    it->residual = residual;
    it->tolerance = tolerance;
  }
}

void VerificationReport::record_flag(std::string_view name, bool ok) {
  record(name, ok ? 0.0 : 1.0, 0.0);
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) {
    auto it = std::find_if(checks_.begin(), checks_.end(),
                           [&](const CheckResult& mine) { return mine.name == c.name; });
    if (it == checks_.end()) {
      checks_.push_back(c);
      continue;
    }
    it->samples += c.samples;
    it->pass = it->pass && c.pass;
    if (c.ratio() > it->ratio()) {
      it->residual = c.residual;
      it->tolerance = c.tolerance;
    }
  }
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace hadinv
