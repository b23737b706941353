#include "nilcomm/cli/report.hpp"

#include <algorithm>

namespace nilcomm::cli {

int RunReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

int RunReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

nlohmann::json to_json(const CheckResult& check) {
  return {{"id", check.id}, {"passed", check.passed}, {"summary", check.summary}, {"detail", check.detail}};
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json j{{"schema", report_schema},
                   {"command", command},
                   {"arguments", arguments},
                   {"seed", seed},
                   {"field", field},
                   {"results", results}};
  if (!checks.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks) list.push_back(cli::to_json(c));
    j["checks"] = std::move(list);
    j["counts"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  }
  if (with_timing) j["seconds"] = seconds;
  return j;
}

}  // namespace nilcomm::cli
