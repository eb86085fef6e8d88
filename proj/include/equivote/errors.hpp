#pragma once

#include <stdexcept>
#include <string>

namespace equivote {

// Malformed or inconsistent input data (bad files, unknown ids, invalid
// profiles). Maps to exit code 2 in the CLI.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A library invariant was violated; indicates a bug, not bad input.
// Maps to exit code 3 in the CLI.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace equivote
