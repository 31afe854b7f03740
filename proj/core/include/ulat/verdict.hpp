#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace ulat {

enum class Status {
  falsified,     // a concrete witness contradicts the claim
  inconclusive,  // no oracle could decide a required sub-claim
  verified,      // every check passed up to a finite horizon
  exact,         // decided by a symbolic argument or by exhaustion
};

std::string_view to_string(Status s);

struct Witness {
  std::string description;
  std::optional<std::size_t> index;
};

/// Outcome of a convergence or uniformity check. A falsified verdict always
/// carries a witness; `decided` marks falsifications that are themselves
/// symbolic or exhaustive (as opposed to a failing certificate).
struct Verdict {
  Status status = Status::inconclusive;
  bool decided = false;
  std::optional<Witness> witness;
  std::size_t horizon = 0;
  std::string detail;

  static Verdict exact(std::string detail = {}) {
    return Verdict{Status::exact, true, std::nullopt, 0, std::move(detail)};
  }
  static Verdict verified(std::size_t horizon, std::string detail = {}) {
    return Verdict{Status::verified, false, std::nullopt, horizon, std::move(detail)};
  }
  static Verdict falsified(Witness w, bool decided = false) {
    return Verdict{Status::falsified, decided, std::move(w), 0, {}};
  }
  static Verdict falsified(std::string description, std::optional<std::size_t> index = std::nullopt,
                           bool decided = false) {
    return falsified(Witness{std::move(description), index}, decided);
  }
  static Verdict inconclusive(std::string detail) {
    return Verdict{Status::inconclusive, false, std::nullopt, 0, std::move(detail)};
  }

  bool accepted() const { return status == Status::exact || status == Status::verified; }
  bool is_exact() const { return status == Status::exact; }
  bool is_falsified() const { return status == Status::falsified; }
};

/// The weaker of two verdicts under falsified < inconclusive < verified < exact.
/// Ties keep the first argument.
inline Verdict weakest(Verdict a, Verdict b) {
  if (static_cast<int>(b.status) < static_cast<int>(a.status)) return b;
  if (a.status == Status::verified && b.status == Status::verified) a.horizon = std::min(a.horizon, b.horizon);
  return a;
}

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::falsified: return "falsified";
    case Status::inconclusive: return "inconclusive";
    case Status::verified: return "verified-at-horizon";
    case Status::exact: return "exact";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  os << to_string(v.status);
  if (v.status == Status::verified) os << "(h=" << v.horizon << ")";
  if (v.witness) {
    os << " [" << v.witness->description;
    if (v.witness->index) os << " @" << *v.witness->index;
    os << "]";
  }
  if (!v.detail.empty()) os << " " << v.detail;
  return os;
}

}  // namespace ulat
