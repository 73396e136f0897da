#pragma once

#include <stdexcept>
#include <string>

namespace csf {

/// A precondition of an operation was violated (bad index, parameter out of
/// a family's range, malformed input).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (e.g. the oracle's edge budget) was exceeded.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, int limit) : std::runtime_error(what), limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

/// An internal consistency check failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractError(message);
}

}  // namespace csf
