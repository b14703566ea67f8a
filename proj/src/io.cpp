#include "thetawalls/io.hpp"

#include "thetawalls/error.hpp"

namespace thetawalls::io {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  }
  return j[key];
}

}  // namespace

Json integer_json(const Integer &z) {
  if (fits_int64(z)) return Json(to_int64(z));
  return Json(z.get_str());
}

Integer integer_from_json(const Json &j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Json rational_json(const Rational &q) { return Json(to_string(q)); }

Rational rational_from_json(const Json &j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw Error(ErrorKind::Parse, "expected a \"num/den\" string, got " + j.dump());
}

Json to_json(const SurfaceNumerics &s) {
  Json j;
  j["c2"] = integer_json(s.c2);
  j["K2"] = integer_json(s.K2);
  j["chi"] = integer_json(s.chi);
  j["tau"] = integer_json(s.tau);
  j["alpha_num"] = integer_json(s.alpha.get_num());
  j["alpha_den"] = integer_json(s.alpha.get_den());
  j["q"] = integer_json(s.q);
  return j;
}

Json to_json(const GeographyReport &r) {
  Json j;
  j["admissible"] = r.admissible;
  j["violated"] = r.violated;
  j["flags"] = {{"positive_index", r.flags.positive_index},
                {"alpha_lt_3_8", r.flags.alpha_lt_3_8},
                {"bmy_boundary", r.flags.bmy_boundary},
                {"qbound", r.flags.qbound}};
  return j;
}

Json to_json(const ChernSlice &v) {
  return {{"r", integer_json(v.r)}, {"d", integer_json(v.d)}, {"s2", integer_json(v.s2)}};
}

ChernSlice chern_slice_from_json(const Json &j) {
  return {integer_from_json(field(j, "r")), integer_from_json(field(j, "d")),
          integer_from_json(field(j, "s2"))};
}

Json to_json(const FullChern &F) {
  return {{"r", integer_json(F.r)},
          {"c1sq", integer_json(F.c1sq)},
          {"c1H", integer_json(F.c1H)},
          {"s2", integer_json(F.s2)}};
}

FullChern full_chern_from_json(const Json &j) {
  return {integer_from_json(field(j, "r")), integer_from_json(field(j, "c1sq")),
          integer_from_json(field(j, "c1H")), integer_from_json(field(j, "s2"))};
}

Json to_json(const WallShape &w) {
  return std::visit(
      [](const auto &shape) -> Json {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, EmptyWall>) {
          return {{"kind", "empty"}};
        } else if constexpr (std::is_same_v<T, EverywhereWall>) {
          return {{"kind", "everywhere"}};
        } else if constexpr (std::is_same_v<T, VerticalWall>) {
          return {{"kind", "vertical"}, {"b0", rational_json(shape.b0)}};
        } else {
          return {{"kind", "semicircle"},
                  {"center", rational_json(shape.center)},
                  {"radius_sq", rational_json(shape.radius_sq)}};
        }
      },
      w);
}

WallShape wall_from_json(const Json &j) {
  const Json &tag = field(j, "kind");
  if (!tag.is_string()) throw Error(ErrorKind::Parse, "wall kind must be a string");
  const std::string kind = tag.get<std::string>();
  if (kind == "empty") return EmptyWall{};
  if (kind == "everywhere") return EverywhereWall{};
  if (kind == "vertical") return VerticalWall{rational_from_json(field(j, "b0"))};
  if (kind == "semicircle") {
    const Rational radius_sq = rational_from_json(field(j, "radius_sq"));
    if (sgn(radius_sq) <= 0) throw Error(ErrorKind::Parse, "semicircle radius_sq must be positive");
    return Semicircle{rational_from_json(field(j, "center")), radius_sq};
  }
  throw Error(ErrorKind::Parse, "unknown wall kind '" + kind + "'");
}

Json to_json(const Hyperbola &h) {
  return {{"kappa", rational_json(h.kappa)}, {"rhs", rational_json(h.rhs)}};
}

Json to_json(const WallCandidate &c) {
  return {{"v", to_json(c.v)}, {"wall", to_json(WallShape{c.wall})},
          {"crossing_sq", rational_json(c.crossing_sq)}};
}

Json to_json(const SliceBounds &b) {
  return {{"r", integer_json(b.r)},
          {"d", integer_json(b.d)},
          {"center_bound", rational_json(b.center_bound)},
          {"center_bound_is_lower", b.center_bound_is_lower},
          {"crossing_lo", rational_json(b.crossing_lo)},
          {"crossing_hi", rational_json(b.crossing_hi)},
          {"s2_min", integer_json(b.s2_min)},
          {"s2_max", integer_json(b.s2_max)}};
}

Json to_json(const CandidateVerdict &v) {
  return {{"accepted", v.accepted}, {"violated", v.violated}, {"notes", v.notes}};
}

Json to_json(const FibrationOption &f) {
  return {{"g", integer_json(f.genus)}, {"d", integer_json(f.dim)}};
}

NSLattice lattice_from_json(const Json &j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "Gram matrix must be an array of arrays");
  IntMatrix gram;
  for (const Json &row : j) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "Gram matrix row must be an array");
    IntVector r;
    for (const Json &x : row) r.push_back(integer_from_json(x));
    gram.push_back(std::move(r));
  }
  return NSLattice(std::move(gram));
}

DivisorClass class_from_json(const Json &j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "divisor class must be an integer array");
  DivisorClass x;
  for (const Json &c : j) x.coords.push_back(integer_from_json(c));
  return x;
}

Json to_json(const DivisorClass &x) {
  Json j = Json::array();
  for (const Integer &c : x.coords) j.push_back(integer_json(c));
  return j;
}

}  // namespace thetawalls::io
