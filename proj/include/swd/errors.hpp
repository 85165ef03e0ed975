#pragma once

#include <stdexcept>
#include <string>

namespace swd {

// Raised when an operation's precondition on its (well-formed) inputs fails,
// e.g. asking for the Verma module of a label that vanishes at the given rank.
class ConstraintViolation : public std::domain_error {
public:
  explicit ConstraintViolation(const std::string& what) : std::domain_error(what) {}
};

// Raised when textual input (partitions, nu, rank) cannot be parsed.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace swd
