#pragma once

#include <stdexcept>
#include <string>

namespace srtrace {

/// Raised when a predicate is queried on the void complex (no faces at all).
class VoidComplexError : public std::domain_error {
 public:
  VoidComplexError() : std::domain_error("undefined on void complex") {}
};

/// A mathematical precondition of an operation does not hold for its input
/// (e.g. the complex is not Cohen-Macaulay, or not a pseudomanifold).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed facet files, field specifiers and the like.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srtrace
