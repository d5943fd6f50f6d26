#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "so3radon/io.hpp"

namespace so3radon {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  Json to_json() const;
  std::string summary() const;
};

struct SuiteOptions {
  std::uint64_t seed = 20240607;
  // test hook: multiplies every 4 pi used by the isometry checks
  double four_pi_scale = 1.0;
};

// harmonics, rotations, radon, isometry, sphere3, sampling
const std::vector<std::string>& suite_names();
// Empty selection runs every suite; unknown names raise DomainError.
VerifyReport run_verify(const std::vector<std::string>& suites, const SuiteOptions& options = {});

}  // namespace so3radon
