#include "inversive/sampling.hpp"
#include "inversive/verify.hpp"
#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;
using testsupport::unit_space;

namespace {

using QF = RationalField;

Cycle<QF> poly(const QuadSpace<QF>& line, long long a, long long b, long long c) {
  return Cycle<QF>(line, rq(a), {rq(b)}, rq(c));
}

VPoint<QF> pt(long long num, long long den = 1) { return VPoint<QF>::finite({rq(num, den)}); }

}  // namespace

TEST_CASE("hyperplane reflection formula") {
  RationalField q;
  auto line = unit_space(q, 1);

  auto p = poly(line, 1, 0, -1);
  CHECK(reflect(p, p) == cycle_scale(rq(-1), p));

  // <q, p> = 2, <p, p> = 1: x^2 - 4(x - 1) = x^2 - 4x + 4.
  auto mirror = poly(line, 0, 1, -1);
  CHECK(reflect(mirror, poly(line, 1, 0, 0)) == poly(line, 1, -4, 4));

  // Cycles orthogonal to the mirror are fixed.
  auto plane = unit_space(q, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    auto m = sample_non_isotropic(plane, rng);
    for (const auto& fixed : orthocomplement(plane, {m})) {
      CHECK(reflect(m, fixed) == fixed);
    }
  }

  auto isotropic = poly(line, 1, -2, 1);
  CHECK(thrown_code([&] { reflect(isotropic, p); }) == errc::isotropic_mirror);
}

TEST_CASE("reflection action on V") {
  RationalField q;
  auto line = unit_space(q, 1);

  auto edge = poly(line, 0, 1, -1);
  CHECK(reflect_point(edge, VPoint<QF>::at_infinity()) == VPoint<QF>::at_infinity());

  auto circle = poly(line, 1, 0, -1);
  CHECK(reflect_point(circle, pt(0)) == VPoint<QF>::at_infinity());
  CHECK(reflect_point(circle, VPoint<QF>::at_infinity()) == pt(0));
  CHECK(reflect_point(circle, pt(2)) == pt(1, 2));
}

TEST_CASE("affine reflection and inversion formulas") {
  RationalField q;
  auto line = unit_space(q, 1);
  auto edge = poly(line, 0, 1, -1);

  CHECK(affine_reflect(edge, pt(0)) == pt(2));
  CHECK(affine_reflect(edge, pt(1)) == pt(1));
  CHECK(affine_reflect(edge, VPoint<QF>::at_infinity()) == VPoint<QF>::at_infinity());

  auto circle = poly(line, 1, 0, -1);
  CHECK(invert_point(circle, pt(2)) == pt(1, 2));
  CHECK(invert_point(circle, pt(1)) == pt(1));
  CHECK(invert_point(circle, pt(0)) == VPoint<QF>::at_infinity());
  CHECK(invert_point(circle, VPoint<QF>::at_infinity()) == pt(0));

  auto zero_size = poly(line, 1, -2, 1);
  CHECK(thrown_code([&] { invert_point(zero_size, pt(0)); }) == errc::zero_size_circle);
}

TEST_CASE("inversion in F_7 matches the reflection action") {
  PrimeField f(7);
  auto plane = unit_space(f, 2);
  auto circle = Cycle<PrimeField>(plane, f.one(), {f.zero(), f.zero()}, f.from_int(-1));
  auto v = VPoint<PrimeField>::finite({f.from_int(2), f.zero()});
  // s = 1 and h((2,0)) = 4, so the image is (2,0)/4 = (4,0) mod 7.
  auto image = invert_point(circle, v);
  CHECK(image == VPoint<PrimeField>::finite({f.from_int(4), f.zero()}));
  CHECK(reflect_point(circle, v) == image);
}

TEST_CASE("cycle matrices compose and certify orthogonality") {
  RationalField q;
  auto line = unit_space(q, 1);

  auto id = as_matrix(line, InversiveWord<QF>{});
  CHECK(id.entries() == identity_matrix(q, 3));
  CHECK(preserves_pairing(id));

  Reflection<QF> r(poly(line, 1, 0, -1));
  auto m = as_matrix(line, {r});
  CHECK(preserves_pairing(m));
  CHECK((m * m).entries() == identity_matrix(q, 3));

  auto doubled = CycleMatrix<QF>(line, identity_matrix(q, 3));
  auto scaled = Matrix<Rat>(3, std::vector<Rat>(3, rq(0)));
  for (int i = 0; i < 3; ++i) scaled[i][i] = rq(2);
  CHECK_FALSE(preserves_pairing(CycleMatrix<QF>(line, scaled)));

  std::mt19937_64 rng(11);
  auto plane = unit_space(q, 2);
  InversiveWord<QF> word;
  for (int i = 0; i < 3; ++i) word.emplace_back(sample_non_isotropic(plane, rng));
  CHECK(preserves_pairing(as_matrix(plane, word)));
}

TEST_CASE("two parallel line reflections compose to a translation") {
  RationalField q;
  auto line = unit_space(q, 1);
  // b x + c1 then b x + c2 sends x to x + 2(c1 - c2)/b.
  auto c1 = rq(1), c2 = rq(-3), b = rq(2);
  InversiveWord<QF> word{Reflection<QF>(Cycle<QF>(line, rq(0), {b}, c1)),
                         Reflection<QF>(Cycle<QF>(line, rq(0), {b}, c2))};
  auto shift = rq(2) * (c1 - c2) / b;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto x = q.sample(rng);
    CHECK(apply_word(word, VPoint<QF>::finite({x})) == VPoint<QF>::finite({x + shift}));
  }
  CHECK(apply_word(word, VPoint<QF>::at_infinity()) == VPoint<QF>::at_infinity());
}

TEST_CASE("pair transport words") {
  RationalField q;
  auto line = unit_space(q, 1);
  auto inf = VPoint<QF>::at_infinity();

  CHECK(map_pair_to_pair(line, pt(0), inf, pt(0), inf).empty());

  auto word = map_pair_to_pair(line, pt(0), inf, pt(1), inf);
  CHECK(word.size() <= 4);
  CHECK(apply_word(word, pt(0)) == pt(1));
  CHECK(apply_word(word, inf) == inf);

  auto swap = map_pair_to_pair(line, pt(0), pt(1), inf, pt(0));
  CHECK(swap.size() <= 4);
  CHECK(apply_word(swap, pt(0)) == inf);
  CHECK(apply_word(swap, pt(1)) == pt(0));

  CHECK(thrown_code([&] { map_pair_to_pair(line, pt(0), pt(0), pt(1), pt(2)); }) ==
        errc::degenerate_input);
}

TEMPLATE_TEST_CASE("isotropic frames are projective frames", "[transforms]", RationalField,
                   PrimeField, QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& space : testsupport::proven_spaces(f)) {
    auto frame = isotropic_frame(space);
    std::size_t m = space.dim() + 2;
    REQUIRE(frame.size() == m + 1);

    if (space.dim() == 1) {
      CHECK(frame[0] == VPoint<TestType>::finite({f.zero()}));
      CHECK(frame[1] == VPoint<TestType>::finite({f.one()}));
      CHECK(frame[2] == VPoint<TestType>::at_infinity());
      CHECK(frame[3] == VPoint<TestType>::finite({f.from_int(2)}));
    }

    // Leave-one-out: every m of the m+1 embedded cycles stay independent.
    for (std::size_t skip = 0; skip <= m; ++skip) {
      Matrix<typename TestType::element_type> rows;
      for (std::size_t i = 0; i <= m; ++i) {
        if (i == skip) continue;
        rows.push_back(point_embed(space, frame[i]).coords());
      }
      CHECK_FALSE(det(f, rows) == f.zero());
    }
  }
}

TEMPLATE_TEST_CASE("reflect-equiv suite passes", "[transforms][suites]", RationalField,
                   PrimeField, QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& v : run_suite(f, "reflect-equiv", 3, 40)) {
    INFO(v.check << ": " << v.witness);
    CHECK(v.pass);
  }
}
