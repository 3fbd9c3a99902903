#include <doctest.h>

#include "ellbundle/json_io.hpp"

using namespace ellbundle;
using json_io::json;

namespace {

WeierstrassCurve curve13() { return WeierstrassCurve::over(Field::prime(13), 4, 1); }

}  // namespace

TEST_CASE("curves and points") {
  const auto q = WeierstrassCurve::over(Field::rationals(), Rational(1, 2), -3);
  const auto j = json_io::to_json(q);
  CHECK(j.at("g2") == "1/2");
  CHECK(j.at("g3") == "-3");
  CHECK(json_io::curve_from_json(j) == q);
  CHECK(json_io::curve_from_json(json::parse(R"({"g2": 4, "g3": 0})")) ==
        WeierstrassCurve::over(Field::rationals(), 4, 0));

  const auto e = curve13();
  for (const auto& p : e.smooth_points()) REQUIRE(json_io::point_from_json(e, json_io::to_json(p)) == p);
  CHECK(json_io::point_from_json(e, json::parse(R"({"X": 0, "Y": 1, "Z": 0})")).is_identity());
  CHECK_THROWS_AS(json_io::point_from_json(e, json::parse(R"({"X": 1, "Y": 1, "Z": 0})")), DomainError);
  CHECK_THROWS_AS(json_io::point_from_json(e, json::parse(R"({"X": 1, "Y": 1})")), DomainError);
  CHECK_THROWS_AS(json_io::curve_from_json(json::parse(R"({"g2": [1]})")), DomainError);
}

TEST_CASE("bundles and divisors") {
  const auto e = curve13();
  const auto pts = e.smooth_points();
  const AtiyahBundle v(e, {{DegreeZeroSheaf::line_bundle(pts[1]), {2, 1}}, {DegreeZeroSheaf::line_bundle(pts[4]), {1}}});
  CHECK(json_io::bundle_from_json(json_io::to_json(v)) == v);
  const auto d = zeta(v);
  const auto jd = json_io::to_json(d);
  CHECK(jd.at("degree") == 4);
  CHECK(json_io::divisor_from_json(jd) == d);

  const auto node = WeierstrassCurve::over(Field::rationals(), 3, 1);
  const AtiyahBundle tf(node, {{DegreeZeroSheaf::torsion_free(), {2}}});
  const auto jtf = json_io::to_json(tf);
  CHECK(jtf.at("components")[0].at("point") == "F");
  CHECK(json_io::bundle_from_json(jtf) == tf);
  CHECK(json_io::to_json(zeta(tf)).at("singularMult") == 2);
  CHECK_FALSE(json_io::to_json(zeta(tf)).contains("classPoint"));
}

TEST_CASE("fibers, classes and splitting types") {
  const auto e = WeierstrassCurve::over(Field::rationals(), 4, 0);
  const auto two = e.point(Rational(0), Rational(0));
  const auto jf = json_io::to_json(fiber(LinearSystemDivisor::from_points(e, {two, two})));
  REQUIRE(jf.size() == 1);
  CHECK(jf[0].at("index") == 2);

  const auto r = RingSpec::fibration(4);
  const auto x = parse_class(r, "1/2*zeta^2 - 3*L");
  const auto jx = json_io::to_json(x);
  CHECK(jx.at("truncation") == 4);
  CHECK(jx.at("text") == x.to_string());
  CHECK(jx.at("terms").size() == 2);
  CHECK(jx.at("terms")[0].at("coefficient") == "-3");
  CHECK(jx.at("terms")[1].at("monomial").at("zeta") == 2);

  const auto js = json_io::to_json(splitting_type_slice(3, 0, false, false));
  CHECK(js.at("degreeSum") == -2);
  CHECK(js.at("degrees") == json::array({0, -1, -1}));
}

TEST_CASE("sections") {
  const auto s = json_io::section_from_json(json::parse(R"({"L": [1, 0], "alpha": [2, -1], "n": 3, "dimB": 2})"));
  CHECK(s.n == 3);
  CHECK(s.pic.rank == 2);
  CHECK_FALSE(s.is_trivial_section);
  CHECK(json_io::to_json(json_io::section_from_json(json_io::to_json(s))) == json_io::to_json(s));
  const auto t = json_io::section_from_json(json::parse(R"({"L": [1], "n": 2, "flags": {"trivialSection": true}})"));
  CHECK(t.is_trivial_section);
  CHECK(t.pic.alpha == PicVector{0});
  CHECK_THROWS_AS(json_io::section_from_json(json::parse(R"({"L": [1], "alpha": [0, 1], "n": 2})")), DomainError);
  CHECK_THROWS_AS(json_io::section_from_json(json::parse(R"({"L": [1]})")), DomainError);
}

TEST_CASE("lattices") {
  const auto re = SurfaceLattice::rational_elliptic();
  const auto j = json_io::to_json(re);
  CHECK(j.at("gram") == json::parse("[[-1, 1], [1, 0]]"));
  CHECK(json_io::to_json(json_io::lattice_from_json(j)) == j);
  CHECK_THROWS_AS(json_io::lattice_from_json(json::parse(R"({"generators": ["sigma", "f"]})")), DomainError);
}

TEST_CASE("errors") {
  const auto j = json_io::error_json(DomainError("off-curve", "point (1, 1) is not on the curve"));
  CHECK(j.at("error") == "off-curve");
  CHECK(j.at("message") == "point (1, 1) is not on the curve");
  CHECK(json::parse(j.dump()) == j);
}
