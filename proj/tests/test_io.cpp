#include <doctest.h>

#include "thetawalls/error.hpp"
#include "thetawalls/io.hpp"

using namespace thetawalls;
using io::Json;

TEST_CASE("surface and geography JSON use stable field names") {
  const SurfaceNumerics s = derive_surface(13, 35);
  CHECK(io::to_json(s).dump() ==
        R"({"c2":13,"K2":35,"chi":4,"tau":9,"alpha_num":13,"alpha_den":35,"q":4})");
  CHECK(io::to_json(check_geography(s)).dump() ==
        R"({"admissible":true,"violated":[],"flags":{"positive_index":true,"alpha_lt_3_8":true,"bmy_boundary":false,"qbound":false}})");
  const Json bad = io::to_json(check_geography(Integer(1), Integer(11)));
  CHECK(bad["admissible"] == false);
  CHECK(bad["violated"].size() >= 1);
}

TEST_CASE("integers switch to strings beyond 64 bits") {
  CHECK(io::integer_json(Integer(-5)) == Json(-5));
  const Integer big("123456789012345678901234567890");
  CHECK(io::integer_json(big) == Json("123456789012345678901234567890"));
  CHECK(io::integer_from_json(io::integer_json(big)) == big);
  CHECK(io::integer_from_json(Json(18446744073709551615ULL)) == Integer("18446744073709551615"));
  CHECK_THROWS_AS(io::integer_from_json(Json(1.5)), Error);
}

TEST_CASE("rationals are reduced num/den strings") {
  CHECK(io::rational_json(make_rational(Integer(-18), Integer(140))) == Json("-9/70"));
  CHECK(io::rational_json(Rational(3)) == Json("3/1"));
  CHECK(io::rational_from_json(Json("6/4")) == make_rational(Integer(3), Integer(2)));
  CHECK(io::rational_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), Error);
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), Error);
}

TEST_CASE("Chern data round trips") {
  const ChernSlice v = make_slice(-2, 35, -9);
  CHECK(io::to_json(v).dump() == R"({"r":-2,"d":35,"s2":-9})");
  CHECK(io::chern_slice_from_json(io::to_json(v)) == v);
  const FullChern F{3, 24, -30, 8};
  CHECK(io::to_json(F).dump() == R"({"r":3,"c1sq":24,"c1H":-30,"s2":8})");
  const FullChern back = io::full_chern_from_json(io::to_json(F));
  CHECK(back.r == 3);
  CHECK(back.c1H == -30);
  try {
    io::chern_slice_from_json(Json{{"r", 1}, {"d", 0}});
    FAIL("expected Parse");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("walls serialize as tagged objects") {
  const WallShape c_h = Semicircle{make_rational(Integer(-9), Integer(70)),
                                   make_rational(Integer(81), Integer(4900))};
  CHECK(io::to_json(c_h).dump() == R"({"kind":"semicircle","center":"-9/70","radius_sq":"81/4900"})");
  for (const WallShape &w : {c_h, WallShape{EmptyWall{}}, WallShape{EverywhereWall{}},
                             WallShape{VerticalWall{make_rational(Integer(-1), Integer(2))}}}) {
    CHECK(io::wall_from_json(io::to_json(w)) == w);
  }
  CHECK(io::to_json(WallShape{VerticalWall{Rational(-1, 2)}}).dump() ==
        R"({"kind":"vertical","b0":"-1/2"})");
  CHECK_THROWS_AS(io::wall_from_json(Json{{"kind", "spiral"}}), Error);
  CHECK_THROWS_AS(io::wall_from_json(Json{{"kind", "semicircle"}, {"center", "0/1"}, {"radius_sq", "0/1"}}),
                  Error);
  CHECK_THROWS_AS(io::wall_from_json(Json::array()), Error);
}

TEST_CASE("enumeration records") {
  const Json h = io::to_json(Hyperbola{Rational(1, 2), Rational(17, 140)});
  CHECK(h.dump() == R"({"kappa":"1/2","rhs":"17/140"})");
  const WallCandidate c{make_slice(1, 0, 0), Semicircle{Rational(-9, 70), Rational(81, 4900)},
                        Rational(81, 4900)};
  CHECK(io::to_json(c).dump() ==
        R"({"v":{"r":1,"d":0,"s2":0},"wall":{"kind":"semicircle","center":"-9/70","radius_sq":"81/4900"},"crossing_sq":"81/4900"})");
  CHECK(io::to_json(FibrationOption{2, 3}).dump() == R"({"g":2,"d":3})");
  CHECK(io::to_json(CandidateVerdict{true, {}, {}}).dump() == R"({"accepted":true,"violated":[],"notes":[]})");
}

TEST_CASE("lattice JSON") {
  const NSLattice L = io::lattice_from_json(Json::parse("[[1,0],[0,-1]]"));
  CHECK(L.rank() == 2);
  CHECK(io::class_from_json(Json::parse("[2,-1]")) == make_class({2, -1}));
  CHECK(io::to_json(make_class({2, -1})).dump() == "[2,-1]");
  CHECK_THROWS_AS(io::lattice_from_json(Json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(io::class_from_json(Json::parse("{}")), Error);
  CHECK_THROWS_AS(io::lattice_from_json(Json::parse("[[1,2],[3,4]]")), Error);
}
