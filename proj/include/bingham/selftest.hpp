// Numeric self-checks runnable from the CLI: quadrature and Monte-Carlo
// cross-validation of the closed-form operations. Deterministic for a
// given seed, including the printed details.

#ifndef BINGHAM_SELFTEST_HPP_
#define BINGHAM_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace bingham {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_selftest(std::uint64_t seed);

} // namespace bingham

#endif
