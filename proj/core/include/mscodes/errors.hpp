#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mscodes {

/// Precondition violation: out-of-range symbol, alphabet mismatch, bad argument.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or materialization would exceed the caller's work budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           ", budget " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mscodes
