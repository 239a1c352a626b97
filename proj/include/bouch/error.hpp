#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bouch {

enum class ErrorCode {
  // tree validation
  EmptyTree,
  NotUnitBond,
  DuplicateBond,
  RootDetached,
  HasCycle,
  NotConnected,
  // generators
  OddLength,
  InvalidArgument,
  ConstraintViolated,
  OverlapDetected,
  Stuck,
  // resource guards
  TooLarge,
  CapExceeded,
  // internal consistency; any of these firing is a bug
  InternalNonDivisible,
  InternalMismatch,
  BoundViolated,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bouch
