#pragma once

#include <stdexcept>
#include <string>

namespace balshift {

// Single exception type for all contract violations and I/O failures.
// Messages carry enough context (file, row, column, ...) to act on.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace balshift
