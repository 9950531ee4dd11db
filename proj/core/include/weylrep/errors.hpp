#pragma once

#include <stdexcept>
#include <string>

namespace weylrep {

/// Raised when an internally computed object fails a postcondition that
/// should hold by construction. Signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace weylrep
