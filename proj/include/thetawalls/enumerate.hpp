#pragma once

// Finite enumeration of numerical-wall candidates for Theta_X[1], the
// inequality sieve for quotients F_i[1] of its HN filtration, and the
// small-q fibration gate.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetawalls/charge.hpp"
#include "thetawalls/surface.hpp"
#include "thetawalls/walls.hpp"

namespace thetawalls {

inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;

struct WallCandidate {
  ChernSlice v;
  Semicircle wall;
  /// c^2 at the point where the wall crosses b = beta0.
  Rational crossing_sq;
};

/// Per-(r, d) record of the two s2 bounds, kept for auditing.
struct SliceBounds {
  Integer r;
  Integer d;
  /// Center strictly right of the vertical wall, as a strict bound on s2.
  Rational center_bound;
  bool center_bound_is_lower = true;
  /// 0 < c^2 <= cmax^2 at b = beta0, affine in s2.
  Rational crossing_lo;  // exclusive
  Rational crossing_hi;  // inclusive
  Integer s2_min;
  Integer s2_max;  // s2_min > s2_max means empty
};

struct WallEnumeration {
  std::vector<WallCandidate> candidates;  // sorted by (r, d, s2)
  std::vector<SliceBounds> bounds;        // sorted by (r, d)
  Integer cells;
};

struct EnumerationRequest {
  Rational beta0;
  Rational cmax;
  long rmax = 1;
  std::uint64_t cell_cap = kDefaultCellCap;
};

/// Every v with |r| <= rmax, 0 < d - r beta0 H2 < KH + 2 beta0 H2, whose wall
/// against Theta_X[1] is a semicircle meeting {b = beta0, 0 < c <= cmax}.
/// Throws InvalidArgument on a bad request and PrecisionBudgetExceeded when
/// the derived box exceeds cell_cap.
WallEnumeration enumerate_wall_candidates(const SurfaceNumerics &s, const PolarizationSlice &P,
                                          const EnumerationRequest &req);

/// Whether H^{-1}(E_i) vanishes for the candidate.
enum class CaseFlag { Zero, Nonzero };

struct CandidateVerdict {
  bool accepted = false;
  std::vector<std::string> violated;
  std::vector<std::string> notes;
};

// Inequality identifiers reported in CandidateVerdict::violated.
inline constexpr const char *kNo1RankRank = "no1rank-1-rank";
inline constexpr const char *kNo1RankDegree = "no1rank-1-degree";
inline constexpr const char *kNo1Rank2Nonzero = "no1rank-2-nonzero";
inline constexpr const char *kNo1Rank2Zero = "no1rank-2-zero";
inline constexpr const char *kTauBound1 = "cor-tau-bound-1";
inline constexpr const char *kTauBound2 = "cor-tau-bound-2";
inline constexpr const char *kHnAlphaRank = "hnalpha-3-rank";
inline constexpr const char *kC1FiPositive = "cor-c1Fi-1";
inline constexpr const char *kFi3 = "cor-Fi3-1";
inline constexpr const char *kHodgeIndex = "hodge-index";

/// Necessary conditions on a quotient F = F_i of Theta_X[1] at H = K_X.
/// Throws GateNotMet unless tau > 0 and alpha < 3/8.
CandidateVerdict filter_quotient_candidate(const SurfaceNumerics &s, const FullChern &F,
                                           CaseFlag hminus1);

/// c1(E~).K < (4 - 2 rk E~)(3 c2 - K^2) for rk E~ in {0, 1}.
bool tilde_bound_check(const SurfaceNumerics &s, const Integer &rkE, const Integer &c1EK);

struct FibrationOption {
  Integer genus;
  Integer dim;  // dim(H^1(Theta) / H^1(Theta)^0)

  friend bool operator==(const FibrationOption &, const FibrationOption &) = default;
};

/// nullopt when the small-q gate fails; otherwise every (g, d) with g, d >= 2
/// and 2 (g - 1)(d - 1) <= q, sorted. Throws NotAdmissible for pairs outside
/// the geography region.
std::optional<std::vector<FibrationOption>> fibration_options(const SurfaceNumerics &s);

}  // namespace thetawalls
