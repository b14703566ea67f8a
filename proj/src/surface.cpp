#include "thetawalls/surface.hpp"

#include "thetawalls/error.hpp"

namespace thetawalls {

SurfaceNumerics derive_surface(const Integer &c2, const Integer &K2) {
  if (c2 < 1 || K2 < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "Chern numbers must be positive, got c2=" + c2.get_str() + " K2=" + K2.get_str());
  }
  const Integer sum = c2 + K2;
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), 12)) {
    throw Error(ErrorKind::NotAdmissible,
                "c2 + K2 = " + sum.get_str() + " is not divisible by 12");
  }
  SurfaceNumerics s;
  s.c2 = c2;
  s.K2 = K2;
  s.chi = sum / 12;
  s.tau = K2 - 2 * c2;
  s.alpha = make_rational(c2, K2);
  s.q = 3 * c2 - K2;
  return s;
}

bool qbound_holds(const Integer &c2, const Integer &K2) {
  const Integer q = 3 * c2 - K2;
  return sgn(q) > 0 && 4 * q * q < K2;
}

GeographyReport check_geography(const Integer &c2, const Integer &K2) {
  GeographyReport report;
  if (c2 < 1) report.violated.emplace_back(kC2Positive);
  if (K2 < 1) report.violated.emplace_back(kK2Positive);
  if (5 * K2 < c2 - 36) report.violated.emplace_back(kNoetherLine);
  if (K2 > 3 * c2) report.violated.emplace_back(kBmy);
  const Integer sum = c2 + K2;
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), 12)) report.violated.emplace_back(kDivisibility);
  report.admissible = report.violated.empty();

  report.flags.positive_index = K2 - 2 * c2 > 0;
  report.flags.alpha_lt_3_8 = sgn(K2) > 0 && 8 * c2 < 3 * K2;
  report.flags.bmy_boundary = K2 == 3 * c2;
  report.flags.qbound = qbound_holds(c2, K2);
  return report;
}

GeographyReport check_geography(const SurfaceNumerics &s) { return check_geography(s.c2, s.K2); }

std::vector<GeographyEntry> scan_geography(long long c2_max) {
  std::vector<GeographyEntry> out;
  for (long long c2 = 1; c2 <= c2_max; ++c2) {
    for (long long K2 = 1; K2 <= 3 * c2; ++K2) {
      const Integer zc2(static_cast<long>(c2));
      const Integer zK2(static_cast<long>(K2));
      out.push_back({zc2, zK2, check_geography(zc2, zK2)});
    }
  }
  return out;
}

}  // namespace thetawalls
