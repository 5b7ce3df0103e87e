#pragma once

#include <stdexcept>
#include <string>

namespace starsum {

// Raised when a theorem's or identity's stated hypothesis fails.
// Distinct from std::invalid_argument (malformed input): hypothesis
// violations are reported as "hypothesis-not-met", never as silent
// wrong values.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration or expansion would exceed the configured
// size cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace starsum
