#include "thetawalls/walls.hpp"

#include "thetawalls/error.hpp"

namespace thetawalls {

WallShape make_semicircle(const Rational &center, const Rational &radius_sq) {
  if (sgn(radius_sq) <= 0) return EmptyWall{};
  return Semicircle{center, radius_sq};
}

bool proportional(const ChernSlice &v, const ChernSlice &w) {
  return v.d * w.r == w.d * v.r && v.s2 * w.r == w.s2 * v.r && v.s2 * w.d == w.s2 * v.d;
}

WallShape wall_between(const ChernSlice &v, const ChernSlice &w, const PolarizationSlice &P) {
  const Integer m = w.d * v.r - v.d * w.r;
  const Integer n = w.s2 * v.r - v.s2 * w.r;
  const Integer p = w.s2 * v.d - v.s2 * w.d;
  if (m == 0 && n == 0 && p == 0) return EverywhereWall{};
  if (m == 0) {
    // -n b + p / H2 = 0.
    if (n == 0) return EmptyWall{};
    return VerticalWall{make_rational(p, n * P.H2)};
  }
  const Rational center = make_rational(n, 2 * m);
  const Rational radius_sq = center * center - make_rational(p, P.H2 * m);
  return make_semicircle(center, radius_sq);
}

Rational vertical_wall(const PolarizationSlice &P) { return make_rational(-P.KH, 2 * P.H2); }

Hyperbola hyperbola_of_tops(const SurfaceNumerics &s, const PolarizationSlice &P) {
  const Integer delta = h_discriminant(theta_shift_slice(s, P), P);
  if (sgn(delta) <= 0) {
    throw Error(ErrorKind::NonpositiveDiscriminant,
                "Delta^H(Theta[1]) = " + delta.get_str() + " is not positive");
  }
  const Integer two_h2 = 2 * P.H2;
  return {make_rational(P.KH, two_h2), make_rational(delta, two_h2 * two_h2)};
}

bool top_on_hyperbola(const WallShape &wall, const Hyperbola &gamma) {
  const auto *sc = std::get_if<Semicircle>(&wall);
  if (sc == nullptr) throw Error(ErrorKind::NotSemicircle, "top_on_hyperbola needs a semicircle");
  const Rational shifted = sc->center + gamma.kappa;
  return shifted * shifted - sc->radius_sq == gamma.rhs;
}

Semicircle closed_form_c_h(const SurfaceNumerics &s, const PolarizationSlice &P) {
  const Rational radius = make_rational(s.tau, 2 * P.KH);
  return {-radius, radius * radius};
}

PairRelation classify_pair(const WallShape &w1, const WallShape &w2) {
  const auto *a = std::get_if<Semicircle>(&w1);
  const auto *b = std::get_if<Semicircle>(&w2);
  PairRelation rel;
  if (a == nullptr || b == nullptr) {
    rel.kind = PairKind::MixedKinds;
    const auto *va = std::get_if<VerticalWall>(&w1);
    const auto *vb = std::get_if<VerticalWall>(&w2);
    const VerticalWall *line = va != nullptr ? va : vb;
    const Semicircle *circle = a != nullptr ? a : b;
    if (line != nullptr && circle != nullptr) {
      const Rational gap = circle->center - line->b0;
      if (gap * gap <= circle->radius_sq) {
        rel.semicircle_side = 0;
      } else {
        rel.semicircle_side = sgn(gap);
      }
    }
    return rel;
  }
  if (*a == *b) {
    rel.kind = PairKind::Identical;
    return rel;
  }
  const Rational diff = a->center - b->center;
  const Rational s = diff * diff - a->radius_sq - b->radius_sq;
  const Rational t = 4 * a->radius_sq * b->radius_sq;
  if (s * s <= t) {
    rel.kind = PairKind::Intersecting;
  } else if (sgn(s) < 0) {
    rel.kind = PairKind::Nested;
    rel.inner = a->radius_sq < b->radius_sq ? 1 : 2;
  } else {
    rel.kind = PairKind::ExteriorDisjoint;
  }
  return rel;
}

Position point_position(const WallShape &wall, const StabilityPoint &p) {
  if (std::holds_alternative<EmptyWall>(wall)) throw Error(ErrorKind::EmptyWall, "empty wall");
  if (std::holds_alternative<EverywhereWall>(wall)) {
    throw Error(ErrorKind::EverywhereWall, "wall fills the half-plane");
  }
  if (const auto *line = std::get_if<VerticalWall>(&wall)) {
    return p.b == line->b0 ? Position::On : Position::Outside;
  }
  const auto &sc = std::get<Semicircle>(wall);
  const Rational offset = p.b - sc.center;
  const int s = cmp(offset * offset + p.c * p.c, sc.radius_sq);
  if (s < 0) return Position::Inside;
  if (s == 0) return Position::On;
  return Position::Outside;
}

int vertical_side(const WallShape &wall, const StabilityPoint &p) {
  const auto *line = std::get_if<VerticalWall>(&wall);
  if (line == nullptr) throw Error(ErrorKind::InvalidArgument, "vertical_side needs a vertical wall");
  return sgn(p.b - line->b0);
}

bool in_strip(const PolarizationSlice &P, const StabilityPoint &p) {
  return p.b > vertical_wall(P) && sgn(p.b) < 0;
}

Rational beta_lower_bound(const SurfaceNumerics &s, const PolarizationSlice &P,
                          const RegionParams &rp) {
  if (rp.dimV < 1) throw Error(ErrorKind::InvalidArgument, "dim V must be >= 1");
  const Rational index_bound = make_rational(-s.tau, P.KH);
  const Rational injectivity_bound = make_rational(Integer(-1), P.H2 * rp.dimV);
  return index_bound > injectivity_bound ? index_bound : injectivity_bound;
}

bool in_Bun_region(const SurfaceNumerics &s, const PolarizationSlice &P, const RegionParams &rp,
                   const StabilityPoint &p) {
  if (!s.positive_index()) throw Error(ErrorKind::NonpositiveIndex, "tau must be positive");
  if (sgn(p.b) >= 0) return false;
  if (p.b <= beta_lower_bound(s, P, rp)) return false;
  return point_position(closed_form_c_h(s, P), p) == Position::Inside;
}

}  // namespace thetawalls
