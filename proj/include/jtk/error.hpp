#pragma once
// error.hpp -- exception type for exactness-contract violations.

#include <stdexcept>
#include <string>

namespace jtk {

// Thrown whenever an operation would leave the exact domain: division by
// zero, insufficient series order, a non-nilpotent exponent, an entry not
// divisible by the requested power of h, malformed input text, and so on.
// Callers that reach a throwing path have violated a documented precondition
// or fed the library inconsistent data; there is no lossy fallback.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

} // namespace jtk
