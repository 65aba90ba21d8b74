#pragma once

#include <stdexcept>
#include <string>

namespace quatlat {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad rational literal, wrong dimensions, unknown keys.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis failed: alpha not totally positive, algebra not
/// totally definite, polynomial reducible, matrix not positive definite, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration exceeded its node budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : Error("enumeration node budget exceeded (" + std::to_string(budget) +
              " nodes)"),
        budget_(budget) {}
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long budget_;
};

/// An internal consistency check failed. Seeing one means a bug, since the
/// checked statements are theorems.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatlat
