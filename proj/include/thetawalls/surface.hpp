#pragma once

// Chern-number bookkeeping for minimal surfaces of general type.

#include <string>
#include <vector>

#include "thetawalls/exact.hpp"

namespace thetawalls {

/// Chern numbers (c2, K^2) with the invariants derived from them.
///
/// Only constructible through derive_surface, which guarantees
/// 12 chi = c2 + K^2, tau = K^2 - 2 c2, q = 3 c2 - K^2, alpha = c2 / K^2.
struct SurfaceNumerics {
  Integer c2;
  Integer K2;
  Integer chi;
  Integer tau;
  Rational alpha;
  Integer q;

  bool positive_index() const { return sgn(tau) > 0; }
};

/// Throws NotAdmissible when c2 + K2 is not divisible by 12 and
/// InvalidArgument when c2 < 1 or K2 < 1.
SurfaceNumerics derive_surface(const Integer &c2, const Integer &K2);

struct GeographyFlags {
  bool positive_index = false;  // tau > 0
  bool alpha_lt_3_8 = false;    // 8 c2 < 3 K^2
  bool bmy_boundary = false;    // K^2 = 3 c2
  bool qbound = false;          // q > 0 and 4 q^2 < K^2
};

struct GeographyReport {
  bool admissible = false;
  std::vector<std::string> violated;
  GeographyFlags flags;
};

// Constraint identifiers carried in GeographyReport::violated.
inline constexpr const char *kC2Positive = "c2-positive";
inline constexpr const char *kK2Positive = "k2-positive";
inline constexpr const char *kNoetherLine = "noether-line";
inline constexpr const char *kBmy = "bmy";
inline constexpr const char *kDivisibility = "noether-divisibility";

/// Works on raw pairs so that non-divisible pairs can still be reported.
GeographyReport check_geography(const Integer &c2, const Integer &K2);
GeographyReport check_geography(const SurfaceNumerics &s);

/// The small-q condition 3c2 - K^2 < sqrt(K^2)/2, squared out.
bool qbound_holds(const Integer &c2, const Integer &K2);

struct GeographyEntry {
  Integer c2;
  Integer K2;
  GeographyReport report;
};

/// Every pair 1 <= c2 <= c2_max, 1 <= K2 <= 3 c2, ordered by (c2, K2).
std::vector<GeographyEntry> scan_geography(long long c2_max);

}  // namespace thetawalls
