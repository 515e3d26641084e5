#pragma once

#include <stdexcept>
#include <string>

namespace vcsys {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input refers to elements outside the system's domain.
class DomainMismatchError : public Error {
public:
  using Error::Error;
};

// A stated precondition does not hold for the given input.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An operation that only makes sense on a maximum family was handed
// something else.  Operations refuse instead of computing garbage,
// because forbidden-label uniqueness fails on non-maximum input.
class NotMaximumError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// A (d+1)-set does not miss exactly one pattern.  Carries the number of
// missing patterns so the caller can see how the family fails.
class NotMaximumOnSetError : public NotMaximumError {
public:
  NotMaximumOnSetError(const std::string& what, int missing_count)
      : NotMaximumError(what), missing_count_(missing_count) {}
  int missing_count() const noexcept { return missing_count_; }

private:
  int missing_count_;
};

// No internally shattered kept-set of the requested size exists.
class NotCompressibleError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class CapExceededError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace vcsys
