#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixmet {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic produced a value outside the 64-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A point name that is not part of the space.
class UnknownPointError : public Error {
public:
  using Error::Error;
};

/// Tuple elements must be pairwise distinct.
class NotDistinctError : public Error {
public:
  using Error::Error;
};

/// Tuple size does not match the arity of the contraction class.
class ArityMismatchError : public Error {
public:
  using Error::Error;
};

class TooFewPointsError : public Error {
public:
  using Error::Error;
};

/// The weighted graph handed to metric_closure does not connect all points.
class DisconnectedGraphError : public Error {
public:
  using Error::Error;
};

/// enumerate_maps refuses spaces whose self-map count exceeds the cap.
class SpaceTooLargeError : public Error {
public:
  using Error::Error;
};

/// Line-oriented input could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace fixmet
