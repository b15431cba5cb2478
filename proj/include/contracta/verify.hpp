#pragma once

#include <string>
#include <vector>

namespace contracta {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  // Exhaustive sweeps cover every graph up to this order (clamped to [3, 8]).
  // 7 keeps the full run in the minutes range; 8 multiplies it by ~12.
  int sweep_order = 7;
};

// Each section reruns one slice of the classification results as executable
// checks: splitting construction properties, the claw classification, the
// critical-edge theory, and the line-graph classification. Check order and
// output are deterministic.
VerifyReport verify_splitting_section(const VerifyOptions& opt = {});
VerifyReport verify_claw_section(const VerifyOptions& opt = {});
VerifyReport verify_critical_section(const VerifyOptions& opt = {});
VerifyReport verify_line_section(const VerifyOptions& opt = {});

// All four sections, in the order above.
VerifyReport verify_all(const VerifyOptions& opt = {});

}  // namespace contracta
