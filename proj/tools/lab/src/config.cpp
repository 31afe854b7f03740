#include "ulat/lab/config.hpp"

#include "ulat/metric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

namespace ulat::lab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    s = s.substr(1, s.size() - 2);
  return std::string(s);
}

// Splits on commas and whitespace; tolerates a surrounding [ ] and quoted items.
std::vector<std::string> split_list(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const std::string item = unquote(cur);
    if (!item.empty()) out.push_back(item);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else cur += ch;
  }
  flush();
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(std::string(key) + ": expected a boolean, got '" + std::string(text) + "'");
}

}  // namespace

std::vector<Rational> SuiteConfig::effective_eps_grid() const {
  return eps_grid.empty() ? default_eps_grid(10) : eps_grid;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError(std::string(key) + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  return v;
}

std::vector<Rational> parse_eps_grid(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    Rational q;
    try {
      q = parse_rational(item);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("eps-grid: " + std::string(e.what()));
    }
    if (q <= 0) throw ConfigError("eps-grid: tolerance " + item + " is not positive");
    out.push_back(q);
  }
  if (out.empty()) throw ConfigError("eps-grid: no tolerances given");
  return out;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  static const std::set<std::string, std::less<>> known = {"seed", "horizon", "eps-grid", "format", "timing", "suites"};
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || (line.front() == '[' && line.back() == ']' && line.find('=') == std::string_view::npos))
      continue;  // blank line or a TOML table header
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    if (!known.count(key)) throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    out[key] = unquote(line.substr(eq + 1));
  }
  return out;
}

void apply_config(SuiteConfig& config, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "seed") {
      config.seed = parse_unsigned(key, value);
    } else if (key == "horizon") {
      config.horizon = parse_unsigned(key, value);
      if (config.horizon == 0) throw ConfigError("horizon must be positive");
    } else if (key == "eps-grid") {
      config.eps_grid = parse_eps_grid(value);
    } else if (key == "format") {
      try {
        config.format = parse_format(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "timing") {
      config.timing = parse_bool(key, value);
    } else if (key == "suites") {
      config.suites = split_list(value);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
}

void apply_environment(SuiteConfig& config,
                       const std::function<std::optional<std::string>(const char*)>& getenv) {
  if (auto s = getenv("ULAT_SEED")) config.seed = parse_unsigned("ULAT_SEED", *s);
  if (auto h = getenv("ULAT_HORIZON")) {
    config.horizon = parse_unsigned("ULAT_HORIZON", *h);
    if (config.horizon == 0) throw ConfigError("ULAT_HORIZON must be positive");
  }
}

std::optional<std::string> process_env(const char* name) {
  const char* v = std::getenv(name);  // NOLINT(concurrency-mt-unsafe)
  if (!v) return std::nullopt;
  return std::string(v);
}

}  // namespace ulat::lab
