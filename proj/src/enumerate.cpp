#include "thetawalls/enumerate.hpp"

#include <future>

#include "thetawalls/error.hpp"

namespace thetawalls {

namespace {

struct RowResult {
  std::vector<SliceBounds> bounds;
  Integer cells{0};
};

// Bounds for a fixed rank r. With w = Theta[1] = (-2, KH, -tau) the wall of
// v = (r, d, s2) has M = KH r + 2 d and, at b = beta0,
//   c^2 = s2 (2 beta0 + KH / H2) / M + (tau d / H2 - tau r beta0) / M - beta0^2,
// which is affine in s2 with nonzero slope because beta0 is right of the
// vertical wall.
RowResult bounds_for_rank(const SurfaceNumerics &s, const PolarizationSlice &P,
                          const EnumerationRequest &req, const Integer &r) {
  RowResult row;
  const Rational h2(P.H2);
  const Rational kh(P.KH);
  const Rational tau(s.tau);
  const Rational beta = req.beta0;
  const Rational vwall = vertical_wall(P);
  const Rational cmax_sq = req.cmax * req.cmax;

  const Rational shift = Rational(r) * beta * h2;
  const Rational width = kh + 2 * beta * h2;
  const Integer d_lo = floor(shift) + 1;
  const Integer d_hi = ceil(shift + width) - 1;

  for (Integer d = d_lo; d <= d_hi; ++d) {
    const Integer m = P.KH * r + 2 * d;
    if (m == 0) continue;
    const Rational mq(m);
    const Rational slope = (2 * beta + kh / h2) / mq;
    const Rational offset = (tau * Rational(d) / h2 - tau * Rational(r) * beta) / mq - beta * beta;

    SliceBounds sb;
    sb.r = r;
    sb.d = d;
    // 0 < slope * s2 + offset <= cmax^2.
    if (sgn(slope) > 0) {
      sb.crossing_lo = -offset / slope;
      sb.crossing_hi = (cmax_sq - offset) / slope;
    } else {
      sb.crossing_lo = (cmax_sq - offset) / slope;
      sb.crossing_hi = -offset / slope;
    }
    // center = (2 s2 - tau r) / (2 M) > vwall.
    sb.center_bound = mq * vwall + tau * Rational(r) / 2;
    sb.center_bound_is_lower = sgn(m) > 0;

    Integer lo;
    Integer hi;
    if (sgn(slope) > 0) {
      lo = floor(sb.crossing_lo) + 1;  // strict
      hi = floor(sb.crossing_hi);      // inclusive
    } else {
      lo = ceil(sb.crossing_lo);       // inclusive
      hi = ceil(sb.crossing_hi) - 1;   // strict
    }
    if (sb.center_bound_is_lower) {
      const Integer c_lo = floor(sb.center_bound) + 1;
      if (c_lo > lo) lo = c_lo;
    } else {
      const Integer c_hi = ceil(sb.center_bound) - 1;
      if (c_hi < hi) hi = c_hi;
    }
    sb.s2_min = lo;
    sb.s2_max = hi;
    if (hi >= lo) row.cells += hi - lo + 1;
    row.bounds.push_back(std::move(sb));
  }
  return row;
}

std::vector<WallCandidate> scan_row(const SurfaceNumerics &s, const PolarizationSlice &P,
                                    const EnumerationRequest &req,
                                    const std::vector<SliceBounds> &bounds) {
  const ChernSlice theta = theta_shift_slice(s, P);
  const Rational cmax_sq = req.cmax * req.cmax;
  std::vector<WallCandidate> out;
  for (const SliceBounds &sb : bounds) {
    for (Integer s2 = sb.s2_min; s2 <= sb.s2_max; ++s2) {
      const ChernSlice v{sb.r, sb.d, s2};
      const WallShape wall = wall_between(v, theta, P);
      const auto *sc = std::get_if<Semicircle>(&wall);
      if (sc == nullptr) continue;
      const Rational offset = req.beta0 - sc->center;
      const Rational height_sq = sc->radius_sq - offset * offset;
      if (sgn(height_sq) <= 0 || height_sq > cmax_sq) continue;
      out.push_back({v, *sc, height_sq});
    }
  }
  return out;
}

}  // namespace

WallEnumeration enumerate_wall_candidates(const SurfaceNumerics &s, const PolarizationSlice &P,
                                          const EnumerationRequest &req) {
  if (!(req.beta0 > vertical_wall(P)) || sgn(req.beta0) >= 0) {
    throw Error(ErrorKind::InvalidArgument, "beta0 must satisfy -KH/2H2 < beta0 < 0, got " +
                                                to_string(req.beta0));
  }
  if (sgn(req.cmax) <= 0) throw Error(ErrorKind::InvalidArgument, "cmax must be positive");
  if (req.rmax < 1) throw Error(ErrorKind::InvalidArgument, "rmax must be >= 1");

  std::vector<std::future<RowResult>> bound_jobs;
  for (long r = -req.rmax; r <= req.rmax; ++r) {
    bound_jobs.push_back(std::async(std::launch::async, [&s, &P, &req, r] {
      return bounds_for_rank(s, P, req, Integer(r));
    }));
  }
  std::vector<RowResult> rows;
  WallEnumeration result;
  result.cells = 0;
  for (auto &job : bound_jobs) {
    rows.push_back(job.get());
    result.cells += rows.back().cells;
  }
  if (result.cells > Integer(std::to_string(req.cell_cap))) {
    throw Error(ErrorKind::PrecisionBudgetExceeded,
                "candidate box has " + result.cells.get_str() + " cells, cap is " +
                    std::to_string(req.cell_cap));
  }

  std::vector<std::future<std::vector<WallCandidate>>> scan_jobs;
  for (const RowResult &row : rows) {
    scan_jobs.push_back(std::async(std::launch::async, [&s, &P, &req, &row] {
      return scan_row(s, P, req, row.bounds);
    }));
  }
  // Rows come in increasing r and each row is already ordered by (d, s2).
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto part = scan_jobs[i].get();
    result.candidates.insert(result.candidates.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
    result.bounds.insert(result.bounds.end(), rows[i].bounds.begin(), rows[i].bounds.end());
  }
  return result;
}

CandidateVerdict filter_quotient_candidate(const SurfaceNumerics &s, const FullChern &F,
                                           CaseFlag hminus1) {
  if (!s.positive_index() || !(s.alpha < Rational(3, 8))) {
    throw Error(ErrorKind::GateNotMet, "needs tau > 0 and alpha < 3/8");
  }
  // H = K_X throughout, so K.H = H^2 = K^2.
  const Integer &k2 = s.K2;
  const Integer &tau = s.tau;
  const Integer neg_deg = -F.c1H;
  CandidateVerdict v;

  if (F.r < 2) v.violated.emplace_back(kNo1RankRank);
  if (sgn(neg_deg) <= 0) v.violated.emplace_back(kNo1RankDegree);

  if (hminus1 == CaseFlag::Nonzero) {
    if (2 * neg_deg > k2) v.violated.emplace_back(kNo1Rank2Nonzero);
  } else if (neg_deg > k2) {
    v.violated.emplace_back(kNo1Rank2Zero);
  }

  if (sgn(neg_deg) > 0) {
    // tau <= s2 K^2 / (-c1.K)
    if (tau * neg_deg > F.s2 * k2) v.violated.emplace_back(kTauBound1);
  } else {
    v.notes.emplace_back("-c1.K <= 0: the first tau bound is undefined");
  }

  const Integer delta = discriminant(F);
  if (sgn(delta) >= 0) {
    if (sgn(F.r) > 0) {
      // tau <= (-c1.K) K^2 / (r K^2)
      if (tau * F.r > neg_deg) v.violated.emplace_back(kTauBound2);
    } else {
      v.notes.emplace_back("rank <= 0: the second tau bound is undefined");
    }
    if (F.r != 2 && F.r != 3) v.violated.emplace_back(kHnAlphaRank);
    if (sgn(F.c1sq) <= 0) v.violated.emplace_back(kC1FiPositive);
  } else {
    v.notes.emplace_back(
        "Bogomolov unstable: constraints on the last HN factor need its Chern data and were not "
        "tested");
  }

  if (3 * tau > neg_deg) v.violated.emplace_back(kFi3);
  if (F.c1sq * k2 > F.c1H * F.c1H) v.violated.emplace_back(kHodgeIndex);

  v.accepted = v.violated.empty();
  return v;
}

bool tilde_bound_check(const SurfaceNumerics &s, const Integer &rkE, const Integer &c1EK) {
  if (rkE != 0 && rkE != 1) throw Error(ErrorKind::BadRank, "rank of E~ must be 0 or 1");
  return c1EK < (4 - 2 * rkE) * s.q;
}

std::optional<std::vector<FibrationOption>> fibration_options(const SurfaceNumerics &s) {
  if (!check_geography(s).admissible) {
    throw Error(ErrorKind::NotAdmissible, "(c2, K2) is outside the geography region");
  }
  if (!qbound_holds(s.c2, s.K2)) return std::nullopt;
  std::vector<FibrationOption> out;
  for (Integer g = 2; 2 * (g - 1) <= s.q; ++g) {
    for (Integer d = 2; 2 * (g - 1) * (d - 1) <= s.q; ++d) out.push_back({g, d});
  }
  return out;
}

}  // namespace thetawalls
