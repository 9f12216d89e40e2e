#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Failure category. The CLI maps these onto exit codes 2, 3 and 4.
enum class ErrorKind {
  input,         // malformed data: bad JSON, not a permutation, bound exceeded
  precondition,  // well-formed data violating an operation's precondition
  verification,  // an identity that must hold did not
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& what) {
  throw Error(ErrorKind::input, what);
}

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw Error(ErrorKind::precondition, what);
}

[[noreturn]] inline void fail_verification(const std::string& what) {
  throw Error(ErrorKind::verification, what);
}

}  // namespace brauer
