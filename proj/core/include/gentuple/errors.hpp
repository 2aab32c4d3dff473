#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gentuple {

// Bad input: malformed syntax, broken group axioms, violated preconditions.
// CLI exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An exploration would exceed the configured budget. Never a partial answer.
// CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

// The request is well-formed but provably has no answer (e.g. the two tuples
// lie in different equivalence classes). CLI exit code 4.
class no_certificate_error : public std::runtime_error {
 public:
  explicit no_certificate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gentuple
