#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulat::lab {

struct ExampleOutput {
  std::string text;
  bool reproduced = false;  // every claim of the example came out as expected
};

/// "ex-r", "ex" or "o1o2". Throws std::invalid_argument for other names.
ExampleOutput run_example(std::string_view name);

const std::vector<std::string>& example_names();

}  // namespace ulat::lab
