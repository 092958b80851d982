#pragma once

// Registry of verification families and the instance lists they generate.
// Default ranges reproduce the acceptance ranges; options narrow or widen them.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rscheck/cli/runner.hpp"

namespace rscheck::cli {

struct RunOptions {
  std::optional<unsigned long> n, p, k, d, m;
  std::optional<unsigned long> max_n, max_p;
  std::optional<std::vector<long>> a, b;
  std::optional<std::string> variant;
  std::optional<std::string> kernel;

  /// Set options as key/value text, fixed key order.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

enum class Group { Sequence, Identity, Kernel, Q, Conjecture };

std::string_view to_string(Group g);

struct Family {
  std::string name;
  Group group;
  std::string description;
  std::string range;
  std::vector<Task> (*tasks)(const RunOptions&);
};

const std::vector<Family>& families();
const Family* find_family(std::string_view name);

/// Every family's tasks in registry order.
std::vector<Task> all_tasks(const RunOptions& options);

/// One line per family.
std::string list_families();

/// "1,-2,3" -> {1,-2,3}; nullopt on malformed text.
std::optional<std::vector<long>> parse_int_list(std::string_view text);

}  // namespace rscheck::cli
