#pragma once

#include <stdexcept>
#include <string>

namespace minmax {

// Thrown when an enumeration-based oracle would exceed its configured
// instance-size guard.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal invariant or a plug-in contract is broken
// (e.g. an ordered solver answers inside a padding rank).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace minmax
