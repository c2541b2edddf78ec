#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

// Raised on violated preconditions and malformed input. The CLI maps it to
// exit status 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpoly
