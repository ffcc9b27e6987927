#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpcl {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad values, unknown ports, empty interactions, and so on.
struct DomainError : Error {
  using Error::Error;
};

/// Arithmetic on extended values that has no defined result, e.g. inf + -inf.
struct ArithmeticError : DomainError {
  using DomainError::DomainError;
};

/// Half-open byte range [begin, end) into the original source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Syntax error with the offending span, so callers can point at the text.
struct ParseError : DomainError {
  ParseError(const std::string& what, SourceSpan where)
      : DomainError(what), span(where) {}
  SourceSpan span;
};

/// A resource guard refused to start a computation that would blow up.
/// The message names the guard and the configured limit.
struct ResourceError : Error {
  using Error::Error;
};

/// An operation needs a monoid property that the given monoid does not claim.
/// The message names the missing flag.
struct HypothesisError : Error {
  using Error::Error;
};

}  // namespace wpcl
