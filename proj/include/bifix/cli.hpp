#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bifix::cli {

struct RunResult {
  int exit_code = 0;
  std::string output;             // stdout text report
  std::optional<nlohmann::json> json;  // body for --json
  std::string json_path;          // destination when --json was given
};

/// Executes one CLI request. Reports are deterministic: byte-identical
/// output for identical requests.
RunResult run(const std::vector<std::string>& args);

}  // namespace bifix::cli
