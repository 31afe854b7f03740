#pragma once

// Human-readable element labels for witnesses. Finite carriers name their
// elements; every other element type is streamed.

#include "ulat/lattice.hpp"

#include <sstream>
#include <string>

namespace ulat {

template <class C>
std::string describe(const C& c, const element_t<C>& x) {
  if constexpr (requires { { c.element_name(x) } -> std::convertible_to<std::string>; }) {
    return c.element_name(x);
  } else {
    std::ostringstream os;
    os << x;
    return os.str();
  }
}

}  // namespace ulat
