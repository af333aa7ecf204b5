#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorcal {

enum class ErrorKind {
  InvalidInput,
  InvalidObserver,
  UnsupportedObserver,
  NotInRestSpace,
  DegenerateSpan,
  MixedChirality,
  ZeroOperator,
  NotLorentz,
  NotOrthochronous,
  BranchAmbiguous,
  NullBase,
  Unresolvable,
  ExcludedCase,
  InvalidState,
  NoConvergence,
  BranchCut,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lorcal
