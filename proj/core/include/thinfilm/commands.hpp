#pragma once

#include <string>
#include <vector>

namespace thinfilm {

// Exit codes: 0 t_end reached, 1 usage/config error, 2 touchdown,
// 3 blow-up, 4 step failure, 5 mms threshold failure.
// THINFILM_OUTPUT_DIR overrides the configured output directory.

int cmd_run(const std::string& config_path);
int cmd_mms(const std::string& config_path);
int cmd_sweep(const std::string& config_path, const std::string& parameter,
              const std::vector<double>& values);

}  // namespace thinfilm
