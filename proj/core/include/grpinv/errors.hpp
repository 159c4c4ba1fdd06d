#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpinv {

/// Caller violated a documented precondition (shape mismatch, mixed moduli, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
 public:
  division_by_zero() : std::domain_error("division by zero in prime field") {}
};

/// An exhaustive computation would need more work than the configured cap allows.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " (requires " + std::to_string(required) + ", budget " +
                           std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace grpinv
