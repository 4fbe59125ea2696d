#include "inversive/projline.hpp"
#include "inversive/verify.hpp"
#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;

namespace {

using QF = RationalField;

BinaryQuadric<QF> quad(long long a, long long b, long long c) {
  RationalField q;
  return BinaryQuadric<QF>(q, rq(a), rq(b), rq(c));
}

}  // namespace

TEST_CASE("cycles and binary quadrics are the same data") {
  RationalField q;
  auto line = standard_line_space(q);

  auto p = Cycle<QF>(line, rq(1), {rq(0)}, rq(-1));  // x^2 - 1
  auto f = quadric_from_cycle(p);
  CHECK(f.uu() == rq(1));
  CHECK(f.uv() == rq(0));
  CHECK(f.vv() == rq(-1));
  CHECK(f.norm() == rq(4));
  CHECK(f.norm() == rq(-4) * det(q, f.bilinear_matrix()));
  CHECK(cycle_from_quadric(line, f) == p);

  // Zero circle (x - u0)^2 corresponds to (u - u0 v)^2.
  auto u0 = rq(3);
  auto zc = point_embed(line, VPoint<QF>::finite({u0}));
  auto g = quadric_from_cycle(zc);
  CHECK(g.uu() == rq(1));
  CHECK(g.uv() == rq(-2) * u0);
  CHECK(g.vv() == u0 * u0);
  CHECK(g.eval(u0, rq(1)) == rq(0));

  // Constants correspond to C v^2, whose locus is the point at infinity.
  auto constant = Cycle<QF>(line, rq(0), {rq(0)}, rq(7));
  auto h = quadric_from_cycle(constant);
  CHECK(h.uu() == rq(0));
  CHECK(h.vv() == rq(7));
  CHECK(h.eval(rq(1), rq(0)) == rq(0));

  auto plane = testsupport::unit_space(q, 2);
  auto off = Cycle<QF>(plane, rq(1), {rq(0), rq(0)}, rq(-1));
  CHECK(thrown_code([&] { quadric_from_cycle(off); }) == errc::dimension_mismatch);
}

TEST_CASE("line pairing values") {
  auto f = quad(1, 0, -1);
  CHECK(line_pairing(f, f) == rq(4));
  auto uv = quad(0, 1, 0);
  CHECK(line_pairing(uv, uv) == rq(1));
  CHECK(line_pairing(quad(1, 0, 0), quad(0, 0, 1)) == rq(-2));
}

TEST_CASE("Moebius maps act on the projective line") {
  RationalField q;
  auto id = Moebius<QF>::identity(q);
  CHECK(id.apply(VPoint<QF>::finite({rq(5)})) == VPoint<QF>::finite({rq(5)}));

  Moebius<QF> inv(q, rq(0), rq(1), rq(1), rq(0));  // x -> 1/x
  CHECK(inv.apply(VPoint<QF>::finite({rq(2)})) == VPoint<QF>::finite({rq(1, 2)}));
  CHECK(inv.apply(VPoint<QF>::finite({rq(0)})) == VPoint<QF>::at_infinity());
  CHECK(inv.apply(VPoint<QF>::at_infinity()) == VPoint<QF>::finite({rq(0)}));

  Moebius<QF> translate(q, rq(1), rq(4), rq(0), rq(1));
  CHECK(translate.apply(VPoint<QF>::at_infinity()) == VPoint<QF>::at_infinity());

  CHECK(proj_equal(inv, Moebius<QF>(q, rq(0), rq(-3), rq(-3), rq(0))));
  CHECK_FALSE(proj_equal(inv, translate));
  CHECK(thrown_code([&] { Moebius<QF>(q, rq(1), rq(2), rq(2), rq(4)); }) ==
        errc::degenerate_input);
}

TEST_CASE("single reflections become fractional linear maps") {
  RationalField q;
  auto line = standard_line_space(q);

  // Line x - 1 acts as x -> -x + 2.
  auto edge = Cycle<QF>(line, rq(0), {rq(1)}, rq(-1));
  auto m_edge = reflection_to_moebius(edge);
  CHECK(proj_equal(m_edge, Moebius<QF>(q, rq(-1), rq(2), rq(0), rq(1))));

  // Circle x^2 + C centered at zero inverts as x -> -C/x.
  auto c = rq(-9);
  auto circle = Cycle<QF>(line, rq(1), {rq(0)}, c);
  auto m_circle = reflection_to_moebius(circle);
  CHECK(proj_equal(m_circle, Moebius<QF>(q, rq(0), -c, rq(1), rq(0))));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto v = sample_vpoint(line, rng);
    CHECK(m_edge.apply(v) == reflect_point(edge, v));
    CHECK(m_circle.apply(v) == reflect_point(circle, v));
  }
}

TEST_CASE("polar involutions") {
  RationalField q;

  auto inv = polar_involution(quad(1, 0, -1));  // u^2 - v^2: x -> 1/x
  CHECK(proj_equal(inv, Moebius<QF>(q, rq(0), rq(1), rq(1), rq(0))));
  CHECK(inv.apply(VPoint<QF>::finite({rq(1)})) == VPoint<QF>::finite({rq(1)}));
  CHECK(inv.apply(VPoint<QF>::finite({rq(-1)})) == VPoint<QF>::finite({rq(-1)}));

  auto neg = polar_involution(quad(0, 1, 0));  // uv: x -> -x
  CHECK(neg.apply(VPoint<QF>::finite({rq(3)})) == VPoint<QF>::finite({rq(-3)}));
  CHECK(neg.apply(VPoint<QF>::finite({rq(0)})) == VPoint<QF>::finite({rq(0)}));
  CHECK(neg.apply(VPoint<QF>::at_infinity()) == VPoint<QF>::at_infinity());

  std::mt19937_64 rng(13);
  RationalField f;
  auto space = standard_line_space(f);
  for (int i = 0; i < 10; ++i) {
    auto v = sample_vpoint(space, rng);
    CHECK(inv.apply(inv.apply(v)) == v);
    CHECK(neg.apply(neg.apply(v)) == v);
  }

  CHECK(thrown_code([] { polar_involution(quad(1, 2, 1)); }) == errc::degenerate_quadric);
}

TEST_CASE("Desargues involutions of regular pencils") {
  RationalField q;

  CHECK(desargues_condition(quad(1, 0, -1), quad(0, 1, 0)));
  CHECK_FALSE(desargues_condition(quad(1, 0, 0), quad(0, 1, 0)));
  CHECK(desargues_condition(quad(1, 0, 1), quad(0, 1, 0)));

  // Pencil {u^2 - v^2, uv}: the complement is u^2 + v^2, whose polar
  // involution is x -> -1/x; it swaps the roots of each member.
  auto inv = desargues_involution(quad(1, 0, -1), quad(0, 1, 0));
  CHECK(proj_equal(inv, polar_involution(quad(1, 0, 1))));
  CHECK(inv.apply(VPoint<QF>::finite({rq(1)})) == VPoint<QF>::finite({rq(-1)}));
  CHECK(inv.apply(VPoint<QF>::finite({rq(0)})) == VPoint<QF>::at_infinity());

  // Pencil through the double point (u - v)^2 is singular.
  CHECK(thrown_code([] { desargues_involution(quad(1, -2, 1), quad(1, 0, -1)); }) ==
        errc::singular_pencil);
}

TEMPLATE_TEST_CASE("projline suite passes", "[projline][suites]", RationalField, PrimeField,
                   QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& v : run_suite(f, "projline", 11, 50)) {
    INFO(v.check << ": " << v.witness);
    CHECK(v.pass);
  }
}
