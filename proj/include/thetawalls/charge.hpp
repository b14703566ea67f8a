#pragma once

// Central charge Z_{cH,bH}, slope functions, exact phase comparison and
// the Bogomolov discriminant toolkit on the (ch0, ch1.H, 2ch2) slice.

#include <optional>
#include <string>
#include <vector>

#include "thetawalls/exact.hpp"
#include "thetawalls/surface.hpp"

namespace thetawalls {

/// The numbers H.H and K.H of a polarization.
struct PolarizationSlice {
  Integer H2;
  Integer KH;
};

/// Throws InvalidArgument unless H2 >= 1 and KH >= 1.
PolarizationSlice make_polarization(const Integer &H2, const Integer &KH);

/// As above and additionally checks the Hodge index bound KH^2 >= K^2 H2
/// against the surface.
PolarizationSlice make_polarization(const SurfaceNumerics &s, const Integer &H2, const Integer &KH);

/// H = K: H2 = KH = K^2.
PolarizationSlice canonical_polarization(const SurfaceNumerics &s);

/// (ch0, ch1.H, 2 ch2). ch2 lives in 1/2 Z, so it is stored doubled.
struct ChernSlice {
  Integer r;
  Integer d;
  Integer s2;

  friend bool operator==(const ChernSlice &, const ChernSlice &) = default;
  friend auto operator<=>(const ChernSlice &a, const ChernSlice &b) {
    if (auto c = cmp(a.r, b.r); c != 0) return c <=> 0;
    if (auto c = cmp(a.d, b.d); c != 0) return c <=> 0;
    return cmp(a.s2, b.s2) <=> 0;
  }
};

ChernSlice operator+(const ChernSlice &a, const ChernSlice &b);
ChernSlice operator-(const ChernSlice &a);

ChernSlice make_slice(long r, long d, long s2);

/// Rational-valued slice, the image of a ChernSlice under a rational twist.
struct RationalSlice {
  Rational r;
  Rational d;
  Rational s2;

  friend bool operator==(const RationalSlice &, const RationalSlice &) = default;
};

RationalSlice to_rational(const ChernSlice &v);

/// (ch0, c1^2, c1.H, 2 ch2).
struct FullChern {
  Integer r;
  Integer c1sq;
  Integer c1H;
  Integer s2;
};

/// Throws HypothesisViolated when c1sq * H2 > c1H^2.
FullChern make_full_chern(const Integer &r, const Integer &c1sq, const Integer &c1H,
                          const Integer &s2, const PolarizationSlice &P);

/// (b, c) with c > 0: omega = cH, B = bH.
struct StabilityPoint {
  Rational b;
  Rational c;
};

StabilityPoint make_point(const Rational &b, const Rational &c);

struct ChargeValue {
  Rational re;
  Rational im;

  friend bool operator==(const ChargeValue &, const ChargeValue &) = default;
};

ChargeValue operator+(const ChargeValue &a, const ChargeValue &b);

/// Re = -s2/2 + d b - (r H2 / 2)(b^2 - c^2), Im = (d - r H2 b) c.
ChargeValue central_charge(const ChernSlice &v, const PolarizationSlice &P, const StabilityPoint &p);
ChargeValue central_charge(const RationalSlice &v, const PolarizationSlice &P,
                           const StabilityPoint &p);

/// ch(Theta_X[1]) = -ch(Theta_X) = (-2, K.H, -tau) on the slice.
ChernSlice theta_shift_slice(const SurfaceNumerics &s, const PolarizationSlice &P);

/// ch(O_X).
ChernSlice structure_sheaf_slice();

/// mu_H = d / r, or +infinity for r = 0.
struct Slope {
  bool infinite = false;
  Rational value;
};

Slope mu_slope(const ChernSlice &v, const PolarizationSlice &P);

/// sign(d / r - b H2). Only meaningful for mu_H-semistable sheaves:
/// +1 puts the sheaf in T_{H,bH}, otherwise it lies in F_{H,bH}.
int twisted_slope_sign(const ChernSlice &v, const PolarizationSlice &P, const Rational &b);

/// Torsion-pair membership from caller-supplied HN slopes (mu_max, mu_min)
/// of a torsion-free sheaf.
enum class TiltSide { Torsion, Free, Neither };
TiltSide tilt_side_from_hn(const std::vector<Rational> &hn_slopes, const PolarizationSlice &P,
                           const Rational &b);

enum class PhaseOrder { Less, Equal, Greater };

/// Compares phi(v) with phi(w) without materializing phases. Both charges
/// must lie in {Im > 0} or on the negative real axis (phase 1).
PhaseOrder phase_compare(const ChernSlice &v, const ChernSlice &w, const PolarizationSlice &P,
                         const StabilityPoint &p);
PhaseOrder phase_compare(const ChargeValue &zv, const ChargeValue &zw);

/// Delta = c1^2 - 2 ch0 ch2 = c1sq - r s2.
Integer discriminant(const FullChern &F);

/// Delta^H = (ch1.H)^2 - 2 H^2 ch0 ch2 = d^2 - H2 r s2.
Integer h_discriminant(const ChernSlice &v, const PolarizationSlice &P);
Rational h_discriminant(const RationalSlice &v, const PolarizationSlice &P);

/// Chern character of v (x) O(-tH).
RationalSlice twist_by_tH(const ChernSlice &v, const PolarizationSlice &P, const Rational &t);
RationalSlice twist_by_tH(const RationalSlice &v, const PolarizationSlice &P, const Rational &t);

/// Delta(F) < 0. Requires r >= 1.
bool bogomolov_unstable(const FullChern &F);

struct MiyaokaBound {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  std::optional<std::string> note;
};

/// Checks (d_E)^2 - H2 r_1 s2_E > Delta^H(E_1) for an HN filtration with
/// factors ordered by strictly decreasing slope and nonnegative degrees.
MiyaokaBound miyaoka_unstable_bound(const ChernSlice &total, const std::vector<ChernSlice> &factors,
                                    const PolarizationSlice &P);

}  // namespace thetawalls
