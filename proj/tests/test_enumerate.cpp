#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "thetawalls/enumerate.hpp"
#include "thetawalls/error.hpp"

using namespace thetawalls;

namespace {

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

const SurfaceNumerics &s1335() {
  static const SurfaceNumerics s = derive_surface(13, 35);
  return s;
}

PolarizationSlice K1335() { return canonical_polarization(s1335()); }

Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }

bool has(const WallEnumeration &e, const ChernSlice &v) {
  return std::any_of(e.candidates.begin(), e.candidates.end(),
                     [&](const WallCandidate &c) { return c.v == v; });
}

std::set<oracle::Triple> as_set(const WallEnumeration &e) {
  std::set<oracle::Triple> out;
  for (const WallCandidate &c : e.candidates) {
    out.insert({oracle::to_long(c.v.r), oracle::to_long(c.v.d), oracle::to_long(c.v.s2)});
  }
  return out;
}

bool contains(const std::vector<std::string> &v, const char *name) {
  return std::find(v.begin(), v.end(), name) != v.end();
}

}  // namespace

TEST_CASE("enumerate_wall_candidates examples") {
  const PolarizationSlice P = K1335();
  const WallEnumeration low = enumerate_wall_candidates(s1335(), P, {q(-9, 70), q(9, 70), 2});
  REQUIRE(has(low, structure_sheaf_slice()));
  CHECK_FALSE(has(low, make_slice(1, 0, 2)));
  for (const WallCandidate &c : low.candidates) {
    if (c.v == structure_sheaf_slice()) {
      CHECK(c.wall == Semicircle{q(-9, 70), q(81, 4900)});
      CHECK(c.crossing_sq == q(81, 4900));
    }
  }

  const WallEnumeration high = enumerate_wall_candidates(s1335(), P, {q(-9, 70), q(10, 1), 2});
  CHECK(has(high, structure_sheaf_slice()));
  REQUIRE(has(high, make_slice(1, 0, 2)));
  for (const WallCandidate &c : high.candidates) {
    if (c.v == make_slice(1, 0, 2)) CHECK(c.crossing_sq == q(289, 4900));
  }

  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(-3, 4), q(1, 1), 2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(-1, 2), q(1, 1), 2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(0, 1), q(1, 1), 2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(-1, 4), q(0, 1), 2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(-1, 4), q(1, 1), 0}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { enumerate_wall_candidates(s1335(), P, {q(-9, 70), q(10, 1), 3, 10}); }) ==
        ErrorKind::PrecisionBudgetExceeded);
}

TEST_CASE("enumeration output is sorted, verified and pairwise disjoint") {
  const PolarizationSlice P = K1335();
  const Hyperbola g = hyperbola_of_tops(s1335(), P);
  const ChernSlice th = theta_shift_slice(s1335(), P);
  const Rational beta0 = q(-9, 70);

  const WallEnumeration e = enumerate_wall_candidates(s1335(), P, {beta0, q(1, 1), 3});
  CHECK(e.cells == Integer(e.candidates.size()));
  CHECK(std::is_sorted(e.candidates.begin(), e.candidates.end(),
                       [](const WallCandidate &a, const WallCandidate &b) { return a.v < b.v; }));
  CHECK(std::adjacent_find(e.candidates.begin(), e.candidates.end(),
                           [](const WallCandidate &a, const WallCandidate &b) { return a.v == b.v; }) ==
        e.candidates.end());
  std::size_t bad = 0;
  for (const WallCandidate &c : e.candidates) {
    const Rational off = beta0 - c.wall.center;
    const bool ok = wall_between(c.v, th, P) == WallShape{c.wall} && top_on_hyperbola(c.wall, g) &&
                    c.wall.center > vertical_wall(P) && sgn(c.crossing_sq) > 0 && c.crossing_sq <= 1 &&
                    off * off + c.crossing_sq == c.wall.radius_sq;
    if (!ok) ++bad;
  }
  CHECK(bad == 0);
  CHECK(std::is_sorted(e.bounds.begin(), e.bounds.end(), [](const SliceBounds &a, const SliceBounds &b) {
    return a.r < b.r || (a.r == b.r && a.d < b.d);
  }));

  const WallEnumeration small = enumerate_wall_candidates(s1335(), P, {beta0, q(9, 70), 3});
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < small.candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < small.candidates.size(); ++j) {
      const Semicircle &a = small.candidates[i].wall;
      const Semicircle &b = small.candidates[j].wall;
      if (!(a == b) && classify_pair(a, b).kind == PairKind::Intersecting) ++crossings;
    }
  }
  CHECK(crossings == 0);
}

TEST_CASE("enumeration matches the box oracle on small configurations") {
  struct Config {
    long c2, k2;
    Rational beta_frac;  // beta0 as a fraction of the vertical wall
    Rational cmax;
    long rmax;
    long smax;
  };
  const std::vector<Config> configs{
      {13, 35, q(9, 35), q(9, 70), 2, 400},  // beta0 = -9/70
      {13, 35, q(9, 35), q(10, 1), 1, 30000},
      {13, 35, q(1, 2), q(1, 2), 2, 400},
      {25, 71, q(1, 3), q(1, 3), 2, 400},
      {9, 39, q(1, 5), q(1, 2), 1, 400},
  };
  for (const Config &cfg : configs) {
    const SurfaceNumerics s = derive_surface(cfg.c2, cfg.k2);
    const PolarizationSlice P = canonical_polarization(s);
    const Rational beta0 = vertical_wall(P) * cfg.beta_frac;
    const WallEnumeration e = enumerate_wall_candidates(s, P, {beta0, cfg.cmax, cfg.rmax});
    const long dmax = 100;
    const oracle::BoxScan box =
        oracle::wall_candidates_by_box(s, P, beta0, cfg.cmax, cfg.rmax, dmax, cfg.smax);
    // The hits must sit well inside the box for the comparison to mean anything.
    CHECK(box.max_abs_s2 < cfg.smax / 2);
    for (const auto &[r, d, s2] : box.hits) CHECK(std::abs(d) < dmax);
    CHECK(as_set(e) == box.hits);
  }
}

TEST_CASE("filter_quotient_candidate examples") {
  const SurfaceNumerics &s = s1335();
  const CandidateVerdict ok = filter_quotient_candidate(s, FullChern{3, 24, -30, 8}, CaseFlag::Zero);
  CHECK(ok.accepted);
  CHECK(ok.violated.empty());

  const CandidateVerdict e = filter_quotient_candidate(s, FullChern{2, 4, -14, 4}, CaseFlag::Zero);
  CHECK_FALSE(e.accepted);
  CHECK(e.violated == std::vector<std::string>{kFi3});
  CHECK_FALSE(e.notes.empty());  // Bogomolov unstable

  const CandidateVerdict nz = filter_quotient_candidate(s, FullChern{3, 24, -30, 8}, CaseFlag::Nonzero);
  CHECK_FALSE(nz.accepted);
  CHECK(contains(nz.violated, kNo1Rank2Nonzero));

  const CandidateVerdict rank1 = filter_quotient_candidate(s, FullChern{1, 0, 5, 0}, CaseFlag::Zero);
  CHECK(contains(rank1.violated, kNo1RankRank));
  CHECK(contains(rank1.violated, kNo1RankDegree));

  const CandidateVerdict hodge = filter_quotient_candidate(s, FullChern{3, 40, -30, 8}, CaseFlag::Zero);
  CHECK(contains(hodge.violated, kHodgeIndex));

  const CandidateVerdict rank4 = filter_quotient_candidate(s, FullChern{4, 25, -30, 6}, CaseFlag::Zero);
  CHECK(contains(rank4.violated, kHnAlphaRank));

  const CandidateVerdict c1neg = filter_quotient_candidate(s, FullChern{2, -10, -30, -6}, CaseFlag::Zero);
  CHECK(contains(c1neg.violated, kC1FiPositive));
  CHECK(contains(c1neg.violated, kTauBound1));

  const CandidateVerdict tau2 = filter_quotient_candidate(s, FullChern{3, 18, -26, 6}, CaseFlag::Zero);
  CHECK(contains(tau2.violated, kTauBound2));

  const CandidateVerdict zero = filter_quotient_candidate(s, FullChern{3, 24, -36, 12}, CaseFlag::Zero);
  CHECK(contains(zero.violated, kNo1Rank2Zero));
}

TEST_CASE("filter gate") {
  const SurfaceNumerics flat = derive_surface(16, 32);
  CHECK(kind_of([&] { filter_quotient_candidate(flat, FullChern{3, 24, -30, 8}, CaseFlag::Zero); }) ==
        ErrorKind::GateNotMet);
  const SurfaceNumerics wide = derive_surface(3, 9);  // alpha = 1/3 but tau = 3
  CHECK_NOTHROW(filter_quotient_candidate(wide, FullChern{3, 1, -3, 1}, CaseFlag::Zero));
  const SurfaceNumerics big_alpha = derive_surface(21, 51);  // 21/51 > 3/8
  CHECK(kind_of([&] {
          filter_quotient_candidate(big_alpha, FullChern{3, 24, -30, 8}, CaseFlag::Zero);
        }) == ErrorKind::GateNotMet);
}

TEST_CASE("Nonzero case is empty when 3 tau > K^2 / 2, and Zero is never stricter") {
  std::mt19937_64 rng(31);
  for (const GeographyEntry &g : scan_geography(60)) {
    if (!g.report.admissible || !g.report.flags.positive_index || !g.report.flags.alpha_lt_3_8) continue;
    const SurfaceNumerics s = derive_surface(g.c2, g.K2);
    const bool empty_case = 6 * s.tau > s.K2;
    const long k2 = oracle::to_long(s.K2);
    std::uniform_int_distribution<long> rank(-1, 5);
    std::uniform_int_distribution<long> c1k(-2 * k2, k2);
    std::uniform_int_distribution<long> small(-3 * k2, 3 * k2);
    for (int i = 0; i < 200; ++i) {
      const FullChern F{rank(rng), small(rng), c1k(rng), small(rng)};
      const CandidateVerdict nz = filter_quotient_candidate(s, F, CaseFlag::Nonzero);
      const CandidateVerdict z = filter_quotient_candidate(s, F, CaseFlag::Zero);
      CHECK(nz.accepted == nz.violated.empty());
      if (empty_case) CHECK_FALSE(nz.accepted);
      if (nz.accepted) CHECK(z.accepted);
    }
  }
}

TEST_CASE("tilde_bound_check") {
  CHECK(tilde_bound_check(s1335(), 0, 15));
  CHECK_FALSE(tilde_bound_check(s1335(), 1, 8));
  CHECK(tilde_bound_check(s1335(), 1, 0));
  CHECK(kind_of([] { tilde_bound_check(s1335(), 2, 0); }) == ErrorKind::BadRank);
  CHECK(kind_of([] { tilde_bound_check(s1335(), -1, 0); }) == ErrorKind::BadRank);
}

TEST_CASE("fibration_options") {
  const auto opts = fibration_options(derive_surface(25, 71));
  REQUIRE(opts.has_value());
  CHECK(*opts == std::vector<FibrationOption>{{2, 2}, {2, 3}, {3, 2}});
  CHECK_FALSE(fibration_options(s1335()).has_value());
  for (const GeographyEntry &g : scan_geography(120)) {
    if (!g.report.admissible || !g.report.flags.qbound) continue;
    const auto o = fibration_options(derive_surface(g.c2, g.K2));
    REQUIRE(o.has_value());
    CHECK(std::find(o->begin(), o->end(), FibrationOption{2, 2}) != o->end());
    CHECK(std::is_sorted(o->begin(), o->end(), [](const auto &a, const auto &b) {
      return a.genus < b.genus || (a.genus == b.genus && a.dim < b.dim);
    }));
  }
}
