#include "thetawalls/error.hpp"

namespace thetawalls {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadAmpleProxy: return "BadAmpleProxy";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::NonpositiveRank: return "NonpositiveRank";
    case ErrorKind::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NonpositiveDiscriminant: return "NonpositiveDiscriminant";
    case ErrorKind::NotSemicircle: return "NotSemicircle";
    case ErrorKind::EmptyWall: return "EmptyWall";
    case ErrorKind::EverywhereWall: return "EverywhereWall";
    case ErrorKind::NonpositiveIndex: return "NonpositiveIndex";
    case ErrorKind::PrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
    case ErrorKind::GateNotMet: return "GateNotMet";
    case ErrorKind::BadRank: return "BadRank";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace thetawalls
