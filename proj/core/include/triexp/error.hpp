#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triexp {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  DivisionByZero,
  NotInvertible,
  BaseMismatch,
  EmptyPeriod,
  OutOfRange,
  NotInAttractor,
  UnsupportedRegime,
  AlphaUndecided,
  CapExceeded,
  NoWitness,
  WitnessMismatch,
  EmptySet,
  DegenerateSubshift,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. The kind is what callers (and the CLI exit-code
/// mapping) dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace triexp
