#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilcomm::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_invalid_input = 3 };

inline constexpr const char* report_schema = "nilcomm.report/1";
inline constexpr std::uint64_t default_seed = 2024;

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();
};

struct RunReport {
  std::string command;
  nlohmann::json arguments = nlohmann::json::object();
  std::uint64_t seed = default_seed;
  std::string field;
  nlohmann::json results = nlohmann::json::object();
  std::vector<CheckResult> checks;
  double seconds = 0;

  int passed() const;
  int failed() const;
  // Wall time is left out unless asked for, so that the output depends only on
  // the command line.
  nlohmann::json to_json(bool with_timing = false) const;
};

nlohmann::json to_json(const CheckResult& check);

}  // namespace nilcomm::cli
