#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rfsa {

/// Caller passed a value outside the operation's domain (foreign symbol,
/// out-of-range state id, word not present in a table, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on the shape of an argument was violated
/// (e.g. minimizing a nondeterministic automaton).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A brute-force routine refused an instance above its budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A learner reached a state that its termination or correctness argument
/// rules out.
class LearnerError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace rfsa
