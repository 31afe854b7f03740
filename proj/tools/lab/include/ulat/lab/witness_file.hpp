#pragma once

// Order-convergence witnesses read from JSON documents of term descriptors:
//
//   {"carrier": "qline", "mode": "O2", "sequence": "(-1)^k/k", "limit": "0",
//    "lower": "-1/k", "upper": "1/k", "eventual": "j+1"}
//
//   {"carrier": "fincof", "mode": "O2", "sequence": "{k}", "limit": "{}",
//    "lower": "{}", "upper": "cofinite-filter", "eventual": "j+1"}
//
// O1 documents give "lower"/"upper" as sequences in k plus an optional
// "start". "horizon" overrides the default horizon.

#include "ulat/verdict.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ulat::lab {

class WitnessFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WitnessCheck {
  std::string carrier;
  std::string mode;
  Verdict verdict;
};

/// Throws WitnessFileError for malformed documents or unsupported carriers.
WitnessCheck check_witness_document(std::string_view json_text, std::optional<std::size_t> horizon_override = {});

}  // namespace ulat::lab
