#pragma once

#include "ulat/lab/report.hpp"
#include "ulat/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulat::lab {

/// Malformed config files, flags or environment values. The CLI maps this
/// to the usage-error exit code.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::size_t horizon = 10'000;
  std::vector<Rational> eps_grid;  // empty means the default {1, 1/2, ..., 2^-10}
  Format format = Format::json;
  bool timing = false;

  std::vector<Rational> effective_eps_grid() const;
};

/// Parses "1, 1/2, 1/4" (commas or whitespace). Every entry must be positive.
std::vector<Rational> parse_eps_grid(std::string_view text);

/// key = value lines; '#' starts a comment; values may be quoted. Keys are
/// seed, horizon, eps-grid, format, timing, suites. Unknown keys are errors.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Applies parsed key/value pairs onto `config`.
void apply_config(SuiteConfig& config, const std::map<std::string, std::string>& values);

/// Applies ULAT_SEED and ULAT_HORIZON when set. `getenv` is injectable for tests.
void apply_environment(SuiteConfig& config,
                       const std::function<std::optional<std::string>(const char*)>& getenv);

std::optional<std::string> process_env(const char* name);

std::uint64_t parse_unsigned(std::string_view key, std::string_view text);

}  // namespace ulat::lab
