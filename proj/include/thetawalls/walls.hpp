#pragma once

// Numerical walls in the (b, c) upper half-plane of stability conditions
// (cH, bH), with the structure specific to Theta_X[1]: the vertical wall,
// the circle C_H of O_X, and the hyperbola carrying the tops of all
// semicircular walls.

#include <variant>

#include "thetawalls/charge.hpp"
#include "thetawalls/exact.hpp"
#include "thetawalls/surface.hpp"

namespace thetawalls {

struct EmptyWall {
  friend bool operator==(const EmptyWall &, const EmptyWall &) = default;
};
struct EverywhereWall {
  friend bool operator==(const EverywhereWall &, const EverywhereWall &) = default;
};
struct VerticalWall {
  Rational b0;
  friend bool operator==(const VerticalWall &, const VerticalWall &) = default;
};
/// (b - center)^2 + c^2 = radius_sq, radius_sq > 0.
struct Semicircle {
  Rational center;
  Rational radius_sq;
  friend bool operator==(const Semicircle &, const Semicircle &) = default;
};

using WallShape = std::variant<EmptyWall, VerticalWall, Semicircle, EverywhereWall>;

/// Semicircle, or EmptyWall when radius_sq <= 0.
WallShape make_semicircle(const Rational &center, const Rational &radius_sq);

/// The locus where Z(v) and Z(w) lie on one ray, from the determinantal
/// equation M (b^2 + c^2) - N b + P / H2 = 0 with
/// M = d_w r_v - d_v r_w, N = s2_w r_v - s2_v r_w, P = s2_w d_v - s2_v d_w.
WallShape wall_between(const ChernSlice &v, const ChernSlice &w, const PolarizationSlice &P);

/// (v.s2, v.d, v.r) and (w.s2, w.d, w.r) are linearly dependent over Q.
bool proportional(const ChernSlice &v, const ChernSlice &w);

/// b = -KH / (2 H2).
Rational vertical_wall(const PolarizationSlice &P);

/// (b + kappa)^2 - c^2 = rhs, the locus Re Z(Theta_X[1]) = 0.
struct Hyperbola {
  Rational kappa;
  Rational rhs;
};

/// kappa = KH / 2H2, rhs = Delta^H(Theta[1]) / (2H2)^2. Throws
/// NonpositiveDiscriminant when Delta^H(Theta[1]) <= 0.
Hyperbola hyperbola_of_tops(const SurfaceNumerics &s, const PolarizationSlice &P);

/// Exact test that the apex (center, sqrt(radius_sq)) lies on the hyperbola.
bool top_on_hyperbola(const WallShape &wall, const Hyperbola &gamma);

/// C_H: center -tau / (2 KH), radius tau / (2 KH), in closed form.
Semicircle closed_form_c_h(const SurfaceNumerics &s, const PolarizationSlice &P);

enum class PairKind { Identical, Nested, ExteriorDisjoint, Intersecting, MixedKinds };

struct PairRelation {
  PairKind kind = PairKind::MixedKinds;
  /// For Nested: 1 or 2, whichever wall is inside.
  int inner = 0;
  /// For MixedKinds with one vertical and one semicircular wall: side of
  /// the semicircle relative to the line (-1 left, +1 right, 0 crossing or
  /// touching). 0 otherwise.
  int semicircle_side = 0;
};

PairRelation classify_pair(const WallShape &w1, const WallShape &w2);

enum class Position { Inside, On, Outside };

/// Semicircle: compares (b - center)^2 + c^2 with radius_sq. Vertical: On
/// when b = b0 and Outside otherwise (use vertical_side for the side).
/// Throws EmptyWall / EverywhereWall.
Position point_position(const WallShape &wall, const StabilityPoint &p);

/// sign(b - b0) for a vertical wall; InvalidArgument for any other shape.
int vertical_side(const WallShape &wall, const StabilityPoint &p);

/// -KH / 2H2 < b < 0.
bool in_strip(const PolarizationSlice &P, const StabilityPoint &p);

struct RegionParams {
  Integer dimV{1};
};

/// max(-tau / KH, -1 / (H2 dimV)), a computable upper bound of beta_H.
Rational beta_lower_bound(const SurfaceNumerics &s, const PolarizationSlice &P,
                          const RegionParams &rp);

/// Strictly inside C_H with beta_lower_bound < b < 0. Throws NonpositiveIndex
/// when tau <= 0.
bool in_Bun_region(const SurfaceNumerics &s, const PolarizationSlice &P, const RegionParams &rp,
                   const StabilityPoint &p);

}  // namespace thetawalls
