#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "finalg/config.hpp"

namespace finalg {

struct RunOptions {
  std::string claims;       // claim selection for verify; empty = "all"
  Idx max_ring_order = 0;   // 0 = keep the config value
};

struct RunOutcome {
  int exit_code = 0;        // 0 holds/success, 1 property false, 2 usage/config
  std::string human;        // human-readable rendering
  nlohmann::json report;    // machine-readable report carrying the same data
};

// Dispatches one command (check / witnesses / enumerate / verify / describe)
// over key=value tokens resolved against the workbench. Never throws: every
// usage, reference or audit problem comes back as exit code 2 with the
// diagnostic in both renderings.
RunOutcome run_command(const std::string& command,
                       const std::vector<std::string>& tokens,
                       const WorkbenchConfig& cfg, const RunOptions& opts = {});

}  // namespace finalg
