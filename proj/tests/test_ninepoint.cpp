#include "inversive/ninepoint.hpp"
#include "inversive/verify.hpp"
#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;

namespace {

using QF = RationalField;

PlanePoint<QF> pp(long long u, long long v) { return PlanePoint<QF>{rq(u), rq(v)}; }

// Independent oracle: the unique monic circle u^2 + v^2 + b1 u + b2 v + c
// through three given points, by solving the 3x3 linear system.
Cycle<QF> circle_through_three(const QuadSpace<QF>& plane, const PlanePoint<QF>& a,
                               const PlanePoint<QF>& b, const PlanePoint<QF>& c) {
  RationalField q;
  Matrix<Rat> rows;
  std::vector<Rat> rhs;
  for (const auto& pt : {a, b, c}) {
    rows.push_back({pt.u, pt.v, rq(1)});
    rhs.push_back(-(pt.u * pt.u + pt.v * pt.v));
  }
  auto sol = solve_linear(q, rows, rhs);
  REQUIRE(sol.has_value());
  return Cycle<QF>(plane, rq(1), {(*sol)[0], (*sol)[1]}, (*sol)[2]);
}

}  // namespace

TEST_CASE("orthocenters") {
  RationalField q;
  CHECK(orthocenter(q, pp(0, 0), pp(4, 0), pp(1, 3)) == pp(1, 1));
  // Right triangle: the orthocenter is the right-angle vertex.
  CHECK(orthocenter(q, pp(0, 0), pp(1, 0), pp(0, 1)) == pp(0, 0));
  CHECK(thrown_code([&] { orthocenter(q, pp(0, 0), pp(1, 1), pp(2, 2)); }) == errc::collinear);
}

TEST_CASE("isotropic side directions are rejected over F_5") {
  PrimeField f(5);
  // Direction (1, 2) satisfies 1 + 4 = 0 mod 5.
  PlanePoint<PrimeField> m{f.from_int(0), f.from_int(0)};
  PlanePoint<PrimeField> n{f.from_int(1), f.from_int(2)};
  PlanePoint<PrimeField> p{f.from_int(3), f.from_int(0)};
  CHECK(thrown_code([&] { orthocenter(f, m, n, p); }) == errc::degenerate_altitudes);
}

TEST_CASE("orthocentric configurations require general position") {
  RationalField q;
  CHECK_NOTHROW(OrthoConfig<QF>(q, pp(0, 0), pp(4, 0), pp(1, 3)));
  // T coincides with the right-angle vertex, which lies on two sides.
  CHECK(thrown_code([&] { OrthoConfig<QF>(q, pp(0, 0), pp(1, 0), pp(0, 1)); }) ==
        errc::degenerate_input);
}

TEST_CASE("orthic pencil generators") {
  RationalField q;
  OrthoConfig<QF> cfg(q, pp(0, 0), pp(4, 0), pp(1, 3));
  auto [q0, q1] = orthic_pencil(cfg);
  const auto one = q.one();
  for (const auto* qq : {&q0, &q1}) {
    CHECK(qq->uu() == -qq->vv());
    for (const auto& pt : {cfg.m(), cfg.n(), cfg.p(), cfg.t()}) {
      CHECK(qq->eval(pt.u, pt.v, one) == rq(0));
    }
  }
  // Any member vanishes at all four base points.
  auto lam = rq(5, 3);
  for (const auto& pt : {cfg.m(), cfg.n(), cfg.p(), cfg.t()}) {
    CHECK(q0.eval(pt.u, pt.v, one) + lam * q1.eval(pt.u, pt.v, one) == rq(0));
  }
}

TEST_CASE("poles of lines with respect to conics") {
  RationalField q;
  Conic<QF> unit(q, {rq(1), rq(0), rq(1), rq(0), rq(0), rq(-1)});  // u^2 + v^2 - w^2
  PlaneLine<QF> infinity{rq(0), rq(0), rq(1)};
  auto pole = pole_of_line(unit, infinity);
  CHECK(pole.x == rq(0));
  CHECK(pole.y == rq(0));
  CHECK_FALSE(pole.w == rq(0));

  // (u - w)^2 + v^2 - w^2: pole of the line at infinity is the center (1, 0).
  Conic<QF> shifted(q, {rq(1), rq(0), rq(1), rq(-2), rq(0), rq(0)});
  auto pole2 = pole_of_line(shifted, infinity);
  CHECK(pole2.x / pole2.w == rq(1));
  CHECK(pole2.y / pole2.w == rq(0));

  // Pole-polar roundtrip: the polar line of the pole is the original line.
  auto mat = shifted.matrix();
  auto back = mat_vec(q, mat, {pole2.x, pole2.y, pole2.w});
  CHECK(back[0] * infinity.b == back[1] * infinity.a);
  CHECK(back[0] * infinity.c == back[2] * infinity.a);

  Conic<QF> pair(q, {rq(0), rq(1), rq(0), rq(0), rq(0), rq(0)});  // uv: degenerate
  CHECK(thrown_code([&] { pole_of_line(pair, infinity); }) == errc::degenerate_conic);
}

TEST_CASE("nine points of the worked configuration") {
  RationalField q;
  OrthoConfig<QF> cfg(q, pp(0, 0), pp(4, 0), pp(1, 3));
  CHECK(cfg.t() == pp(1, 1));
  auto pts = nine_points(cfg);
  REQUIRE(pts.omitted.empty());
  REQUIRE(pts.points.size() == 9);

  std::vector<PlanePoint<QF>> expected{
      PlanePoint<QF>{rq(2), rq(0)},        PlanePoint<QF>{rq(1), rq(2)},
      PlanePoint<QF>{rq(1, 2), rq(3, 2)},  PlanePoint<QF>{rq(5, 2), rq(1, 2)},
      PlanePoint<QF>{rq(1, 2), rq(1, 2)},  PlanePoint<QF>{rq(5, 2), rq(3, 2)},
      PlanePoint<QF>{rq(1), rq(0)},        PlanePoint<QF>{rq(2, 5), rq(6, 5)},
      PlanePoint<QF>{rq(2), rq(2)}};
  CHECK(pts.points == expected);

  // All nine distinct; midpoints symmetric in their endpoints.
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) CHECK_FALSE(pts.points[i] == pts.points[j]);
  }
  auto half = rq(1, 2);
  CHECK(pts.points[0] == PlanePoint<QF>{half * (cfg.m().u + cfg.n().u),
                                        half * (cfg.m().v + cfg.n().v)});
}

TEST_CASE("nine-point circle of the worked configuration") {
  RationalField q;
  auto plane = testsupport::unit_space(q, 2);
  OrthoConfig<QF> cfg(q, pp(0, 0), pp(4, 0), pp(1, 3));
  auto pts = nine_points(cfg);

  // Oracle first: the circle through the three midpoints MN, PT, MP.
  auto oracle = circle_through_three(plane, pts.points[0], pts.points[1], pts.points[2]);
  auto oracle_cs = center_and_size(oracle);
  CHECK(oracle_cs.center == std::vector<Rat>{rq(3, 2), rq(1)});
  CHECK(oracle_cs.size == rq(5, 4));

  auto circle = nine_point_circle(cfg);
  CHECK(proj_equiv(circle, oracle));
  auto cs = center_and_size(circle);
  CHECK(cs.center == std::vector<Rat>{rq(3, 2), rq(1)});
  CHECK(cs.size == rq(5, 4));

  for (const auto& pt : pts.points) {
    CHECK(evaluate(circle, {pt.u, pt.v}) == rq(0));
  }
}

TEST_CASE("eleven-point conic requires a regular restriction") {
  RationalField q;
  OrthoConfig<QF> cfg(q, pp(0, 0), pp(4, 0), pp(1, 3));
  auto [q0, q1] = orthic_pencil(cfg);
  // The side MN carries two base points: the restricted pencil is singular.
  auto mn = plane::line_through(q, cfg.m(), cfg.n());
  CHECK(thrown_code([&] { eleven_point_conic(q0, q1, mn); }) == errc::singular_restriction);
}

TEST_CASE("nine-point circles over F_7") {
  PrimeField f(7);
  PlanePoint<PrimeField> m{f.from_int(0), f.from_int(0)};
  PlanePoint<PrimeField> n{f.from_int(1), f.from_int(0)};
  PlanePoint<PrimeField> p{f.from_int(2), f.from_int(1)};
  OrthoConfig<PrimeField> cfg(f, m, n, p);
  auto circle = nine_point_circle(cfg);
  auto pts = nine_points(cfg);
  REQUIRE(pts.omitted.empty());
  for (const auto& pt : pts.points) {
    CHECK(evaluate(circle, {pt.u, pt.v}) == f.zero());
  }
}

TEMPLATE_TEST_CASE("ninepoint suite passes", "[ninepoint][suites]", RationalField, PrimeField,
                   QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& v : run_suite(f, "ninepoint", 13, 30)) {
    INFO(v.check << ": " << v.witness);
    CHECK(v.pass);
  }
}
