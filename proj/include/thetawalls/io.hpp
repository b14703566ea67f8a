#pragma once

// JSON encodings with stable field names. Integers are JSON numbers when
// they fit in 64 bits and decimal strings otherwise; rationals are always
// "num/den" strings.

#include <json.hpp>

#include "thetawalls/charge.hpp"
#include "thetawalls/enumerate.hpp"
#include "thetawalls/lattice.hpp"
#include "thetawalls/surface.hpp"
#include "thetawalls/walls.hpp"

namespace thetawalls::io {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer &z);
Integer integer_from_json(const Json &j);
Json rational_json(const Rational &q);
Rational rational_from_json(const Json &j);

Json to_json(const SurfaceNumerics &s);
Json to_json(const GeographyReport &r);
Json to_json(const ChernSlice &v);
ChernSlice chern_slice_from_json(const Json &j);
Json to_json(const FullChern &F);
FullChern full_chern_from_json(const Json &j);
Json to_json(const WallShape &w);
WallShape wall_from_json(const Json &j);
Json to_json(const Hyperbola &h);
Json to_json(const WallCandidate &c);
Json to_json(const SliceBounds &b);
Json to_json(const CandidateVerdict &v);
Json to_json(const FibrationOption &f);

/// Gram matrix as an array of integer arrays.
NSLattice lattice_from_json(const Json &j);
DivisorClass class_from_json(const Json &j);
Json to_json(const DivisorClass &x);

}  // namespace thetawalls::io
