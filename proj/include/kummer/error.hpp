#pragma once

#include <stdexcept>

namespace kummer {

/// Raised for inputs outside an operation's domain (bad level, malformed
/// syntax, mismatched moduli). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace kummer
