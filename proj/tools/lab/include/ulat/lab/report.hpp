#pragma once

// Suite reports and their JSON / Markdown renderings.

#include "ulat/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ulat::lab {

enum class CheckStatus {
  pass,
  fail,
  expected_failure,  // a counterexample search that was supposed to succeed did
  inconclusive,
};

enum class SuiteStatus { pass, fail, inconclusive };

std::string_view to_string(CheckStatus s);
std::string_view to_string(SuiteStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string verdict;  // the underlying oracle verdict, e.g. "exact" or "verified-at-horizon(h=10000)"
  std::uint64_t cases = 0;
  std::optional<std::string> witness;
};

struct SuiteRecord {
  std::string suite;
  std::string anchor;
  std::vector<CheckRecord> checks;
  /// Wall-clock time; only rendered when timing output is requested.
  std::optional<double> elapsed_ms;

  SuiteStatus status() const;
  std::uint64_t cases() const;
  /// Witness of the first failing check, if any.
  std::optional<std::string> witness() const;
};

struct Report {
  std::vector<SuiteRecord> suites;

  bool all_pass() const;
};

enum class Format { json, markdown };

/// Throws std::invalid_argument for anything other than "json", "md" or "markdown".
Format parse_format(std::string_view text);

std::string emit_report(const Report& report, Format format);

/// Maps an oracle verdict onto a check: exact and verified pass, falsified
/// fails with its witness, inconclusive stays inconclusive.
CheckRecord check_from_verdict(std::string name, const Verdict& v, std::uint64_t cases);

/// For counterexample searches: a falsified verdict is an expected failure,
/// anything else is a failed search.
CheckRecord expect_counterexample(std::string name, const Verdict& v, std::uint64_t cases);

}  // namespace ulat::lab
