#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetawalls {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  NotAdmissible,
  DimensionMismatch,
  NotSymmetric,
  BadAmpleProxy,
  BoundTooLarge,
  ZeroRank,
  NonpositiveRank,
  NotInUpperHalfPlane,
  HypothesisViolated,
  NonpositiveDiscriminant,
  NotSemicircle,
  EmptyWall,
  EverywhereWall,
  NonpositiveIndex,
  PrecisionBudgetExceeded,
  GateNotMet,
  BadRank,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetawalls
