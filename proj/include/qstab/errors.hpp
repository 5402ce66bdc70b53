#pragma once

#include <stdexcept>
#include <string>

namespace qstab {

// Bad input: violated precondition, malformed document. CLI exit code 1.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration cap exceeded. CLI exit code 2.
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (e.g. a Kac coefficient that is not a
// polynomial). Always a bug. CLI exit code 3.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qstab
