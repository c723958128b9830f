#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defsem {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownArgument : public Error {
 public:
  explicit UnknownArgument(const std::string& name)
      : Error("unknown argument '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Hard size guard on exhaustive procedures. Never silently truncated.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

}  // namespace defsem
