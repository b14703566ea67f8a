#pragma once

// Deterministic SVG 1.1 wall diagrams in the (b, c) half-plane.
//
// Pixel map: x = (b - b_min) / (b_max - b_min) * width,
//            y = (1 - c / c_max) * height.
// All geometry is exact until a coordinate is written, where it is rounded
// to two decimals.

#include <string>
#include <vector>

#include "thetawalls/enumerate.hpp"
#include "thetawalls/walls.hpp"

namespace thetawalls {

struct RenderLayers {
  bool vertical = true;
  bool hyperbola = true;
  bool c_h = true;
  bool candidates = true;
  bool region = true;
};

struct RenderSpec {
  Rational b_min;
  Rational b_max;
  Rational c_max;
  int width_px = 800;
  int height_px = 400;
  RenderLayers layers;
};

/// b in [5/4 v, -1/4 v] around the vertical wall v, with c_max chosen so
/// that both axes share one scale.
RenderSpec default_render_spec(const PolarizationSlice &P, int width_px = 800, int height_px = 400);

/// Throws InvalidArgument unless b_min < b_max, c_max > 0 and both pixel
/// sizes are at least 64.
void validate(const RenderSpec &spec);

inline constexpr int kHyperbolaSamples = 256;

/// Exact rational points of the right branch of the hyperbola, parametrized
/// by t = (b + kappa) + c so that b + kappa = (t + rhs/t)/2 and c = (t - rhs/t)/2.
std::vector<StabilityPoint> hyperbola_samples(const Hyperbola &gamma, const Rational &c_max,
                                              int count = kHyperbolaSamples);

std::string render_walls_svg(const SurfaceNumerics &s, const PolarizationSlice &P,
                             const RenderSpec &spec, const std::vector<WallCandidate> &candidates,
                             const RegionParams &rp);

}  // namespace thetawalls
