#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorenz {

enum class ErrorKind {
  // words
  EmptyWord,
  InvalidLetter,
  PeriodicWord,
  DuplicateComponent,
  // braid / invariants
  OddInterCrossings,
  NotAKnot,
  ParityError,
  // tlink
  InvalidParams,
  Infeasible,
  // jones
  TooManyCrossings,
  NotCoprime,
  DivisionRemainder,
  Overflow,
  // modular
  Parabolic,
  NotHyperbolic,
  // flow
  NonFinite,
  NoEvents,
  AmbiguousSymbol,
  // atlas
  BadFilter,
  IOError,
  CapExceeded,
  CorruptRecord,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace lorenz
