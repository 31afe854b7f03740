#pragma once

#include "ulat/lab/config.hpp"
#include "ulat/lab/report.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulat::lab {

class UnknownSuiteError : public std::invalid_argument {
 public:
  explicit UnknownSuiteError(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
};

/// Registry of runnable suites, sorted by name.
const std::vector<SuiteInfo>& suite_registry();
bool is_known_suite(std::string_view name);

/// Runs one suite. Throws UnknownSuiteError for names outside the registry.
SuiteRecord run_suite(std::string_view name, const SuiteConfig& config);

/// Runs the configured suites (all of them when `config.suites` is empty or
/// contains "all"). Every name is validated before anything runs; records
/// are ordered by suite name and duplicates are dropped.
Report run_suites(const SuiteConfig& config);

}  // namespace ulat::lab
