#pragma once

#include <cstdint>

#include "bgg/io.hpp"

namespace bgg {

struct VerifyConfig {
  std::string algebra = "conformal:3,0";
  std::string rep = "standard";
  int degree = 3;
  std::uint64_t seed = 1;
  std::string scope = "all";  // homology | flat | bgg | all
  bool inject_fault = false;  // flip one structure constant before validating
};

// Runs every module invariant applicable to the configured instance; checks
// outside the instance's reach are reported "not applicable" with a reason,
// never skipped silently.
ReportDocument verify_suite(const VerifyConfig& cfg);

}  // namespace bgg
