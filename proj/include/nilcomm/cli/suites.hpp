#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcomm/cli/report.hpp"
#include "nilcomm/exactalg/field.hpp"

namespace nilcomm::cli {

struct SuiteOptions {
  int n_max = 0;    // 0 selects the suite's default
  int samples = 0;  // random draws per check; 0 selects the suite's default
  std::uint64_t seed = default_seed;
  FieldSpec field;
  unsigned threads = 1;
};

// A check fills in `passed`, `summary` and `detail`; its generator is seeded from
// the run seed and the check id, so results do not depend on scheduling.
struct Check {
  std::string id;
  std::function<void(Rng&, CheckResult&)> run;
};

// centralizer, components, correspondence, charts.
const std::vector<std::string>& suite_names();

// Checks of one suite, or of every suite for "all". Throws invalid_argument for
// an unknown name.
std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& options);

// Runs the checks on up to `threads` threads and returns the results sorted by id.
// An exception inside a check fails that check.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, unsigned threads);

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id);

// NILCOMM_THREADS if set to a positive integer, else the hardware concurrency.
unsigned thread_limit();

}  // namespace nilcomm::cli
