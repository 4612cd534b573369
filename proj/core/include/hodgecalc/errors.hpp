#pragma once

#include <stdexcept>
#include <string>

namespace hodgecalc {

/// Caller supplied an argument outside the documented domain.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two computation routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A combinatorial enumeration would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hodgecalc
