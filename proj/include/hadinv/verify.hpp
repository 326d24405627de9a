#pragma once

// Randomized property suites for every identity the library implements.
// Each trial draws its instance from its own (seed, suite, trial) stream, so
// results do not depend on trial order or on which other suites ran.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadinv/core/matrix.hpp"
#include "hadinv/report.hpp"

namespace hadinv::verify {

struct SuiteConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  ToleranceConfig tol{};
};

/// Theta^{o(-T)} = Theta^H, unimodularity, rank one, involution. m, n <= 16.
VerificationReport lemma1(const SuiteConfig& cfg);
/// |A o Theta| = |A| e^{j sum(theta + phi)}. n <= 16.
VerificationReport lemma2(const SuiteConfig& cfg);
/// Gram and triple-product structure of angle matrices. m, n <= 64; trial 0 is
/// the fixed 2 x 2 instance.
VerificationReport lemma3(const SuiteConfig& cfg);
/// (A o Theta)^-1 = A^-1 o Theta^H, n in 1..32.
VerificationReport theorem1(const SuiteConfig& cfg);
/// Cofactor oracle against the structured inverse, n <= 4.
VerificationReport adjugate_oracle(const SuiteConfig& cfg);
/// (A o Theta^T)^-1 = A^-1 o Theta^*, n <= 16.
VerificationReport corollary(const SuiteConfig& cfg);
/// (A o Theta)^+ = A^+ o Theta^H over tall, square and wide shapes, dims <= 24.
VerificationReport theorem2(const SuiteConfig& cfg);

/// CLI suite names: lemma1 lemma2 lemma3 thm1 thm2 all. thm1 bundles
/// theorem1, the corollary and the cofactor oracle.
bool is_suite_name(std::string_view name) noexcept;

using NamedReport = std::pair<std::string, VerificationReport>;
/// Throws InvalidArgument on an unknown name.
std::vector<NamedReport> run_suite(std::string_view name, const SuiteConfig& cfg);

}  // namespace hadinv::verify
