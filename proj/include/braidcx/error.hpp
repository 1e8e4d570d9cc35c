#pragma once

#include <stdexcept>
#include <string>

namespace braidcx {

/// Invalid input: unknown ids, violated preconditions, malformed data.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A predicate that is supposed to be subgraph-closed rejected a subgraph of a member.
class FamilyNotClosedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A height function assigns equal heights to two vertices of one cell.
class InvalidHeightError : public DomainError {
 public:
  InvalidHeightError(const std::string& what, std::string cell)
      : DomainError(what), witness_cell(std::move(cell)) {}
  std::string witness_cell;
};

/// A construction would exceed the configured cell or enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed (e.g. Euler characteristic mismatch).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braidcx
