#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsehalf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The exact oracle was asked to run above its configured vertex cap.
class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A construction that is proven to succeed did not. Carries a graph6
/// reproducer so the instance can be re-examined.
class CounterexampleCandidate : public Error {
 public:
  CounterexampleCandidate(const std::string& what, std::string reproducer)
      : Error(what), reproducer_(std::move(reproducer)) {}
  const std::string& reproducer() const { return reproducer_; }

 private:
  std::string reproducer_;
};

}  // namespace sparsehalf
