#pragma once

#include <stdexcept>
#include <string>

namespace regsyn {

enum class ErrorCode {
  SyntaxError,
  UnknownIdentifier,
  DuplicateTransition,
  Unreachable,
  InvalidBound,
  EventNotInType,
  ArityMismatch,
  InvalidAtom,
  InvalidRegion,
  EventSetMismatch,
  ExplosionGuard,
  StateClash,
  NameClash,
  IndexOutOfRange,
  NotCubic,
  ClauseArity,
  SizeGuard,
  NotAModel,
  UnknownCatalog,
  Io,
};

const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(code_name(c)) + ": " + msg), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace regsyn
