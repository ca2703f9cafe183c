#pragma once

#include <stdexcept>
#include <string>

namespace bezout {

// Caller misuse: bad arguments, violated preconditions, malformed input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The mathematics refuses the input (zero polynomial, singular class, ...).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCoprime : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
};

// Every arbitrary-equation variation produced a zero apparent resultant.
class CommonComponent : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
};

class BranchFailure : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
};

class SizeGuardExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}
  // Without the line:column prefix.
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

// Desk-scale guards are on unless BEZOUT_SIZE_GUARD=off.
bool size_guard_enabled();

}  // namespace bezout
