#pragma once

#include <string>
#include <vector>

#include "igrowth/subgroup_enum.hpp"

namespace igrowth {

enum class VerifyLevel { Quick, Full };

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed = true;
};

// Cross-checks the enumeration, growth and sequence machinery against
// independent derivations. Quick keeps to small groups; Full adds the
// expensive product and search cases. inject_failure appends a check that is
// forced to fail, to exercise failure reporting end to end.
VerifyReport run_verification(VerifyLevel level, bool inject_failure,
                              const EnumOptions& opt = {});

}  // namespace igrowth
