#include "ulat/lab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ulat::lab {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::expected_failure: return "expected-failure";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

SuiteStatus SuiteRecord::status() const {
  SuiteStatus out = SuiteStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return SuiteStatus::fail;
    if (c.status == CheckStatus::inconclusive) out = SuiteStatus::inconclusive;
  }
  return out;
}

std::uint64_t SuiteRecord::cases() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.cases;
  return total;
}

std::optional<std::string> SuiteRecord::witness() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return c.witness ? c.witness : std::optional<std::string>(c.name);
  return std::nullopt;
}

bool Report::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteRecord& s) { return s.status() == SuiteStatus::pass; });
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "md" || text == "markdown") return Format::markdown;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "' (expected json or md)");
}

namespace {

std::string verdict_text(const Verdict& v) {
  std::string s(to_string(v.status));
  if (v.status == Status::verified) s += "(h=" + std::to_string(v.horizon) + ")";
  return s;
}

std::string emit_json(const Report& report) {
  ordered_json doc;
  doc["version"] = 1;
  doc["suites"] = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json rec;
    rec["suite"] = s.suite;
    rec["anchor"] = s.anchor;
    rec["status"] = to_string(s.status());
    rec["cases"] = s.cases();
    const auto w = s.witness();
    rec["witness"] = w ? ordered_json(*w) : ordered_json(nullptr);
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json cr;
      cr["name"] = c.name;
      cr["status"] = to_string(c.status);
      cr["verdict"] = c.verdict;
      cr["cases"] = c.cases;
      cr["witness"] = c.witness ? ordered_json(*c.witness) : ordered_json(nullptr);
      checks.push_back(std::move(cr));
    }
    rec["checks"] = std::move(checks);
    if (s.elapsed_ms) rec["elapsed_ms"] = *s.elapsed_ms;
    doc["suites"].push_back(std::move(rec));
  }
  return doc.dump() + "\n";
}

// Table cells cannot contain raw pipes or newlines.
std::string cell(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

std::string emit_markdown(const Report& report) {
  std::ostringstream os;
  const bool timing = std::any_of(report.suites.begin(), report.suites.end(),
                                  [](const SuiteRecord& s) { return s.elapsed_ms.has_value(); });
  os << "| suite | anchor | status | cases | witness |" << (timing ? " elapsed ms |" : "") << "\n";
  os << "|---|---|---|---:|---|" << (timing ? "---:|" : "") << "\n";
  for (const auto& s : report.suites) {
    const auto w = s.witness();
    os << "| " << cell(s.suite) << " | " << cell(s.anchor) << " | " << to_string(s.status()) << " | " << s.cases()
       << " | " << (w ? cell(*w) : std::string("")) << " |";
    if (timing) os << " " << (s.elapsed_ms ? std::to_string(static_cast<long long>(*s.elapsed_ms)) : "") << " |";
    os << "\n";
  }
  bool header = false;
  for (const auto& s : report.suites)
    for (const auto& c : s.checks) {
      if (c.status != CheckStatus::expected_failure) continue;
      if (!header) {
        os << "\nExpected failures (counterexamples found):\n\n";
        header = true;
      }
      os << "- " << s.suite << " / " << c.name << ": " << (c.witness ? *c.witness : std::string("-")) << "\n";
    }
  return os.str();
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  return format == Format::json ? emit_json(report) : emit_markdown(report);
}

CheckRecord check_from_verdict(std::string name, const Verdict& v, std::uint64_t cases) {
  CheckRecord c{std::move(name), CheckStatus::pass, verdict_text(v), cases, std::nullopt};
  switch (v.status) {
    case Status::exact:
    case Status::verified: break;
    case Status::falsified:
      c.status = CheckStatus::fail;
      c.witness = v.witness ? v.witness->description : std::string("no witness recorded");
      break;
    case Status::inconclusive:
      c.status = CheckStatus::inconclusive;
      c.witness = v.detail;
      break;
  }
  return c;
}

CheckRecord expect_counterexample(std::string name, const Verdict& v, std::uint64_t cases) {
  CheckRecord c{std::move(name), CheckStatus::expected_failure, verdict_text(v), cases, std::nullopt};
  if (v.is_falsified()) {
    c.witness = v.witness ? v.witness->description : std::string("no witness recorded");
  } else {
    c.status = CheckStatus::fail;
    c.witness = "expected a counterexample, search found none (" + verdict_text(v) + ")";
  }
  return c;
}

}  // namespace ulat::lab
