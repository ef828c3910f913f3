#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgcert {

/// Raised when two values defined over different alphabets are combined.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or name-resolution failure while reading text input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of a mathematical construction does not hold
/// (non-invertible endomorphism, word outside a subgroup, bad parameters).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed the configured desk-scale limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgcert
