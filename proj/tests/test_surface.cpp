#include <doctest.h>

#include <algorithm>

#include "thetawalls/error.hpp"
#include "thetawalls/surface.hpp"

using namespace thetawalls;

namespace {

bool contains(const std::vector<std::string> &v, const char *name) {
  return std::find(v.begin(), v.end(), name) != v.end();
}

}  // namespace

TEST_CASE("derive_surface via the Noether formula") {
  const SurfaceNumerics s = derive_surface(13, 35);
  CHECK(s.chi == 4);
  CHECK(s.tau == 9);
  CHECK(s.alpha == Rational(13, 35));
  CHECK(s.q == 4);

  const SurfaceNumerics ball = derive_surface(3, 9);
  CHECK(ball.chi == 1);
  CHECK(ball.tau == 3);
  CHECK(ball.alpha == Rational(1, 3));
  CHECK(ball.q == 0);
  CHECK(check_geography(ball).flags.bmy_boundary);
}

TEST_CASE("derive_surface rejects non-integral chi and nonpositive numbers") {
  try {
    derive_surface(1, 2);
    FAIL("expected NotAdmissible");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
  CHECK_THROWS_AS(derive_surface(0, 12), Error);
  CHECK_THROWS_AS(derive_surface(13, -1), Error);
}

TEST_CASE("check_geography flags") {
  const GeographyReport r = check_geography(derive_surface(13, 35));
  CHECK(r.admissible);
  CHECK(r.violated.empty());
  CHECK(r.flags.positive_index);
  CHECK(r.flags.alpha_lt_3_8);
  CHECK_FALSE(r.flags.qbound);  // 4 * 16 = 64 >= 35
  CHECK_FALSE(r.flags.bmy_boundary);

  const GeographyReport r2 = check_geography(derive_surface(25, 71));
  CHECK(r2.admissible);
  CHECK(r2.flags.qbound);  // 64 < 71

  const GeographyReport bad = check_geography(Integer(1), Integer(11));
  CHECK_FALSE(bad.admissible);
  CHECK(contains(bad.violated, kBmy));

  const GeographyReport below = check_geography(Integer(100), Integer(8));
  CHECK(contains(below.violated, kNoetherLine));  // 40 < 64
  CHECK(contains(check_geography(Integer(1), Integer(2)).violated, kDivisibility));
  CHECK(contains(check_geography(Integer(0), Integer(12)).violated, kC2Positive));
}

TEST_CASE("qbound is strict and needs q > 0") {
  CHECK_FALSE(qbound_holds(Integer(3), Integer(9)));    // q = 0
  CHECK(qbound_holds(Integer(22), Integer(64)));  // q = 2, 16 < 64
  // 4 q^2 == K^2 exactly is excluded.
  CHECK_FALSE(qbound_holds(Integer(12), Integer(32)));  // q = 4, 64 vs 32
  CHECK_FALSE(qbound_holds(Integer(29), Integer(81)));  // q = 6, 144 vs 81
}

TEST_CASE("scan_geography") {
  CHECK(scan_geography(0).empty());

  const auto small = scan_geography(3);
  const auto it = std::find_if(small.begin(), small.end(),
                               [](const GeographyEntry &e) { return e.c2 == 3 && e.K2 == 9; });
  REQUIRE(it != small.end());
  CHECK(it->report.admissible);
  CHECK(it->report.flags.bmy_boundary);
  CHECK(std::is_sorted(small.begin(), small.end(), [](const auto &a, const auto &b) {
    return a.c2 < b.c2 || (a.c2 == b.c2 && a.K2 < b.K2);
  }));

  const auto mid = scan_geography(13);
  const auto hit = std::find_if(mid.begin(), mid.end(),
                                [](const GeographyEntry &e) { return e.c2 == 13 && e.K2 == 35; });
  REQUIRE(hit != mid.end());
  CHECK(hit->report.flags.positive_index);
  CHECK(hit->report.flags.alpha_lt_3_8);
}

TEST_CASE("geography invariants over the scan") {
  for (const GeographyEntry &e : scan_geography(120)) {
    if (!e.report.admissible) continue;
    const SurfaceNumerics s = derive_surface(e.c2, e.K2);
    CHECK(12 * s.chi == s.c2 + s.K2);
    CHECK(s.tau + 2 * s.c2 == s.K2);
    CHECK(s.alpha >= Rational(1, 3));
    CHECK((s.tau > 0) == (s.alpha < Rational(1, 2)));
    if (s.q != 0) CHECK(mpz_divisible_ui_p(s.q.get_mpz_t(), 4) != 0);
  }
}
