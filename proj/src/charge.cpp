#include "thetawalls/charge.hpp"

#include "thetawalls/error.hpp"

namespace thetawalls {

PolarizationSlice make_polarization(const Integer &H2, const Integer &KH) {
  if (H2 < 1) throw Error(ErrorKind::InvalidArgument, "H.H must be >= 1");
  if (KH < 1) throw Error(ErrorKind::InvalidArgument, "K.H must be >= 1 for an ample H");
  return {H2, KH};
}

PolarizationSlice make_polarization(const SurfaceNumerics &s, const Integer &H2, const Integer &KH) {
  PolarizationSlice P = make_polarization(H2, KH);
  if (KH * KH < s.K2 * H2) {
    throw Error(ErrorKind::InvalidArgument, "Hodge index violated: (K.H)^2 < K^2 H^2");
  }
  return P;
}

PolarizationSlice canonical_polarization(const SurfaceNumerics &s) { return {s.K2, s.K2}; }

ChernSlice operator+(const ChernSlice &a, const ChernSlice &b) {
  return {a.r + b.r, a.d + b.d, a.s2 + b.s2};
}

ChernSlice operator-(const ChernSlice &a) { return {-a.r, -a.d, -a.s2}; }

ChernSlice make_slice(long r, long d, long s2) { return {Integer(r), Integer(d), Integer(s2)}; }

RationalSlice to_rational(const ChernSlice &v) {
  return {Rational(v.r), Rational(v.d), Rational(v.s2)};
}

FullChern make_full_chern(const Integer &r, const Integer &c1sq, const Integer &c1H,
                          const Integer &s2, const PolarizationSlice &P) {
  if (c1sq * P.H2 > c1H * c1H) {
    throw Error(ErrorKind::HypothesisViolated, "Hodge index violated: c1^2 H^2 > (c1.H)^2");
  }
  return {r, c1sq, c1H, s2};
}

StabilityPoint make_point(const Rational &b, const Rational &c) {
  if (sgn(c) <= 0) throw Error(ErrorKind::InvalidArgument, "stability point needs c > 0");
  return {b, c};
}

ChargeValue operator+(const ChargeValue &a, const ChargeValue &b) {
  return {a.re + b.re, a.im + b.im};
}

ChargeValue central_charge(const RationalSlice &v, const PolarizationSlice &P,
                           const StabilityPoint &p) {
  const Rational h2(P.H2);
  ChargeValue z;
  z.re = -v.s2 / 2 + v.d * p.b - v.r * h2 / 2 * (p.b * p.b - p.c * p.c);
  z.im = (v.d - v.r * h2 * p.b) * p.c;
  return z;
}

ChargeValue central_charge(const ChernSlice &v, const PolarizationSlice &P, const StabilityPoint &p) {
  return central_charge(to_rational(v), P, p);
}

ChernSlice theta_shift_slice(const SurfaceNumerics &s, const PolarizationSlice &P) {
  return {Integer(-2), P.KH, -s.tau};
}

ChernSlice structure_sheaf_slice() { return make_slice(1, 0, 0); }

Slope mu_slope(const ChernSlice &v, const PolarizationSlice &) {
  if (v.r == 0) return {true, Rational(0)};
  return {false, make_rational(v.d, v.r)};
}

int twisted_slope_sign(const ChernSlice &v, const PolarizationSlice &P, const Rational &b) {
  if (v.r == 0) throw Error(ErrorKind::ZeroRank, "twisted slope needs nonzero rank");
  return sgn(make_rational(v.d, v.r) - b * P.H2);
}

TiltSide tilt_side_from_hn(const std::vector<Rational> &hn_slopes, const PolarizationSlice &P,
                           const Rational &b) {
  if (hn_slopes.empty()) throw Error(ErrorKind::InvalidArgument, "empty HN slope list");
  const Rational threshold = b * P.H2;
  bool all_above = true;
  bool all_below = true;
  for (const Rational &mu : hn_slopes) {
    if (mu <= threshold) all_above = false;
    if (mu > threshold) all_below = false;
  }
  if (all_above) return TiltSide::Torsion;
  if (all_below) return TiltSide::Free;
  return TiltSide::Neither;
}

namespace {

bool in_closed_upper_half_plane(const ChargeValue &z) {
  return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) < 0);
}

}  // namespace

PhaseOrder phase_compare(const ChargeValue &zv, const ChargeValue &zw) {
  if (!in_closed_upper_half_plane(zv) || !in_closed_upper_half_plane(zw)) {
    throw Error(ErrorKind::NotInUpperHalfPlane, "charge outside the closed upper half plane");
  }
  const bool v_one = sgn(zv.im) == 0;
  const bool w_one = sgn(zw.im) == 0;
  if (v_one && w_one) return PhaseOrder::Equal;
  if (v_one) return PhaseOrder::Greater;
  if (w_one) return PhaseOrder::Less;
  // Cotangent re/im is strictly decreasing in the phase.
  const int s = cmp(zv.re * zw.im, zw.re * zv.im);
  if (s < 0) return PhaseOrder::Greater;
  if (s > 0) return PhaseOrder::Less;
  return PhaseOrder::Equal;
}

PhaseOrder phase_compare(const ChernSlice &v, const ChernSlice &w, const PolarizationSlice &P,
                         const StabilityPoint &p) {
  return phase_compare(central_charge(v, P, p), central_charge(w, P, p));
}

Integer discriminant(const FullChern &F) { return F.c1sq - F.r * F.s2; }

Integer h_discriminant(const ChernSlice &v, const PolarizationSlice &P) {
  return v.d * v.d - P.H2 * v.r * v.s2;
}

Rational h_discriminant(const RationalSlice &v, const PolarizationSlice &P) {
  return v.d * v.d - Rational(P.H2) * v.r * v.s2;
}

RationalSlice twist_by_tH(const RationalSlice &v, const PolarizationSlice &P, const Rational &t) {
  const Rational h2(P.H2);
  RationalSlice out;
  out.r = v.r;
  out.d = v.d - v.r * t * h2;
  out.s2 = v.s2 - 2 * v.d * t + v.r * t * t * h2;
  return out;
}

RationalSlice twist_by_tH(const ChernSlice &v, const PolarizationSlice &P, const Rational &t) {
  return twist_by_tH(to_rational(v), P, t);
}

bool bogomolov_unstable(const FullChern &F) {
  if (F.r < 1) throw Error(ErrorKind::NonpositiveRank, "Bogomolov test needs rank >= 1");
  return sgn(discriminant(F)) < 0;
}

MiyaokaBound miyaoka_unstable_bound(const ChernSlice &total, const std::vector<ChernSlice> &factors,
                                    const PolarizationSlice &P) {
  if (factors.empty()) throw Error(ErrorKind::HypothesisViolated, "no HN factors given");
  ChernSlice sum{Integer(0), Integer(0), Integer(0)};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ChernSlice &f = factors[i];
    if (f.r < 1) {
      throw Error(ErrorKind::HypothesisViolated, "factor " + std::to_string(i + 1) + " has rank < 1");
    }
    if (f.d < 0) {
      throw Error(ErrorKind::HypothesisViolated,
                  "factor " + std::to_string(i + 1) + " has negative degree (positivity)");
    }
    if (i > 0) {
      const ChernSlice &prev = factors[i - 1];
      if (f.d * prev.r >= prev.d * f.r) {
        throw Error(ErrorKind::HypothesisViolated,
                    "slopes not strictly decreasing at factor " + std::to_string(i + 1));
      }
    }
    sum = sum + f;
  }
  if (!(sum == total)) throw Error(ErrorKind::HypothesisViolated, "factors do not sum to the total");

  const ChernSlice &first = factors.front();
  MiyaokaBound out;
  out.lhs = Rational(total.d * total.d - P.H2 * first.r * total.s2);
  out.rhs = Rational(h_discriminant(first, P));
  out.holds = out.lhs > out.rhs;
  if (factors.size() == 1) out.note = "single factor: the filtration is trivial, so the strict bound is not expected";
  return out;
}

}  // namespace thetawalls
