#pragma once

#include <stdexcept>
#include <string>

namespace tcay {

// Base for every error raised by the library. Messages use 1-based labels.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds the desk-scale bounds an operation supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied value does not satisfy the stated contract, e.g. a map
// claimed to be an automorphism is not one.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A line-graph automorphism that has no inducing graph automorphism.
class NotLiftable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tcay
