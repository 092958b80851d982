#pragma once

#include <functional>
#include <vector>

#include "rscheck/check_result.hpp"

namespace rscheck::cli {

using Task = std::function<CheckResult()>;

/// Runs the tasks on up to `jobs` threads. Results keep the task order; if
/// any task throws, the exception of the earliest such task is rethrown
/// after all workers finish.
std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

}  // namespace rscheck::cli
