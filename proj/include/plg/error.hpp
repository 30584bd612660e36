#pragma once

#include <stdexcept>
#include <string>

namespace plg {

// Every contract violation in the library throws Error with one of these
// kinds; the CLI maps any Error to exit status 1.
enum class Err {
  BadParams,
  NonPositive,
  BreakpointNotInA,
  SlopeNotInLambda,
  NotBijective,
  OutOfRange,
  OutOfDomain,
  ParamMismatch,
  BadInterval,
  NoValidS,
  WrongParams,
  BadBase,
  NotInSubgroup,
  NotInF,
  NotInB,
  IdentityViolated,
  BadWindows,
  SupportsOverlap,
  VerificationFailed,
  NotFixed,
  TrivialGenerator,
  ParseError,
};

const char* err_name(Err kind);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind), raw_(msg) {}

  Err kind() const { return kind_; }
  // message without the kind prefix, for wrapping into a new Error
  const std::string& raw() const { return raw_; }

 private:
  Err kind_;
  std::string raw_;
};

}  // namespace plg
