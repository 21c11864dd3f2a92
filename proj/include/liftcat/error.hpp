#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown element/object/arrow ids supplied by a caller.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; line is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structure violates the laws an operation relies on.
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what,
                          std::vector<std::string> witnesses = {})
      : Error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::vector<std::string> witnesses = {})
      : Error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

// Division search found zero or several quotients; witnesses list them.
class DivisionFailure : public StructureError {
 public:
  using StructureError::StructureError;
};

// An exhaustive enumeration would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace liftcat
