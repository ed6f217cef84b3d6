#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace submod {

/// Bad parameters or malformed input (maps to CLI exit code 2).
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or search would exceed its size guard (CLI exit code 4).
/// Carries the predicted size so callers can report it without doing the work.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, std::string predicted)
        : std::runtime_error(what + " (predicted size " + predicted + ")"),
          predicted_(std::move(predicted)) {}

    const std::string& predicted() const { return predicted_; }

  private:
    std::string predicted_;
};

}  // namespace submod
