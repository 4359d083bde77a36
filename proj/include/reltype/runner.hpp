#pragma once

#include "reltype/parser.hpp"

namespace reltype {

struct RunOptions {
  std::optional<FieldDesc> field_override;
  std::optional<OrderSpec> order_override;
  unsigned degree_bound = 60;
  double timeout_seconds = 0;
  bool json = false;
  bool with_stats = false;
  unsigned long seed = 0;  // recorded in reports, reserved for sampling
};

// 0 = ok, 1 = input error, 2 = resource abort, 3 = precondition
// violated.
struct RunResult {
  int exit_code = 0;
  std::string output;  // report text or JSON, for stdout
  std::string error;   // diagnostic, for stderr (empty when ok)
};

RunResult run_script(const std::string& text, const RunOptions& opts = {});

}  // namespace reltype
