#include "inversive/sampling.hpp"
#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;
using testsupport::unit_space;

TEST_CASE("dot products in diagonal form") {
  RationalField q;
  auto plane = unit_space(q, 2);
  CHECK(plane.dot({rq(1), rq(0)}, {rq(0), rq(1)}) == rq(0));
  CHECK(plane.dot({rq(1), rq(2)}, {rq(3), rq(4)}) == rq(11));
  CHECK(plane.norm({rq(3), rq(4)}) == rq(25));
  CHECK(plane.norm(plane.zero_vector()) == rq(0));

  PrimeField f7(7);
  auto fplane = unit_space(f7, 2);
  CHECK(fplane.dot({f7.from_int(2), f7.from_int(3)}, {f7.from_int(2), f7.from_int(3)}) ==
        f7.from_int(6));
  CHECK(fplane.norm({f7.from_int(1), f7.from_int(2)}) == f7.from_int(5));

  QuadSpace<RationalField> weighted(q, {rq(2), rq(-3)});
  CHECK(weighted.dot({rq(1), rq(1)}, {rq(1), rq(1)}) == rq(-1));
}

TEST_CASE("space construction enforces its invariants") {
  RationalField q;
  PrimeField f7(7);
  CHECK(thrown_code([&] { QuadSpace<RationalField>(q, {}); }) == errc::degenerate_input);
  CHECK(thrown_code([&] { QuadSpace<RationalField>(q, {rq(1), rq(0)}); }) ==
        errc::degenerate_input);
  CHECK(thrown_code([&] {
          QuadSpace<PrimeField>(f7, {f7.one(), f7.one(), f7.one()});
        }) == errc::no_anisotropic_form);
  auto plane = unit_space(q, 2);
  CHECK(thrown_code([&] { plane.dot({rq(1)}, {rq(1), rq(2)}); }) == errc::dimension_mismatch);
}

TEST_CASE("anisotropy certificates at construction") {
  RationalField q;
  CHECK(unit_space(q, 3).status() == AnisoStatus::proven);
  CHECK(unit_space(q, 1).status() == AnisoStatus::proven);

  PrimeField f7(7);
  // Squares mod 7 are {0, 1, 2, 4}; -1 = 6 is not among them.
  CHECK(unit_space(f7, 2).status() == AnisoStatus::proven);

  PrimeField f5(5);
  auto refuted = unit_space(f5, 2);
  CHECK(refuted.status() == AnisoStatus::refuted);
  REQUIRE(refuted.isotropy_witness().has_value());
  auto w = *refuted.isotropy_witness();
  CHECK(w == std::vector<FpElem>{f5.from_int(1), f5.from_int(2)});
  CHECK(refuted.norm(w) == f5.zero());

  QuadSpace<RationalField> hyperbolic(q, {rq(1), rq(-1)});
  CHECK(hyperbolic.status() == AnisoStatus::refuted);
  CHECK(hyperbolic.norm(*hyperbolic.isotropy_witness()) == rq(0));

  // Mixed signs but still anisotropic: x^2 = 2 y^2 has no rational solution.
  QuadSpace<RationalField> mixed(q, {rq(1), rq(-2)});
  CHECK(mixed.status() == AnisoStatus::proven);
}

TEST_CASE("verify_anisotropic searches beyond the constructive criteria") {
  RationalField q;
  QuadSpace<RationalField> pythagorean(q, {rq(1), rq(1), rq(-1)});
  CHECK(pythagorean.status() == AnisoStatus::assumed_by_user);
  auto verdict = pythagorean.verify_anisotropic(4);
  REQUIRE(verdict.kind == AnisoKind::refuted);
  REQUIRE(verdict.witness.has_value());
  CHECK(pythagorean.norm(*verdict.witness) == rq(0));
  CHECK_FALSE(pythagorean.is_zero_vec(*verdict.witness));

  // x^2 + y^2 = 3 z^2 has no nontrivial rational solution; stays unknown.
  QuadSpace<RationalField> three(q, {rq(1), rq(1), rq(-3)});
  CHECK(three.verify_anisotropic(6).kind == AnisoKind::unknown);

  CHECK(unit_space(q, 3).verify_anisotropic(2).kind == AnisoKind::proven);
  PrimeField f5(5);
  CHECK(unit_space(f5, 2).verify_anisotropic(2).kind == AnisoKind::refuted);
}

TEST_CASE("proven finite spaces are anisotropic by exhaustion") {
  PrimeField f7(7);
  auto plane = unit_space(f7, 2);
  REQUIRE(plane.status() == AnisoStatus::proven);
  for (std::int64_t x = 0; x < 7; ++x) {
    for (std::int64_t y = 0; y < 7; ++y) {
      if (x == 0 && y == 0) continue;
      CHECK_FALSE(plane.norm({f7.from_int(x), f7.from_int(y)}) == f7.zero());
    }
  }
}

TEMPLATE_TEST_CASE("dot symmetry, bilinearity and polarization", "[quad_space]", RationalField,
                   PrimeField, QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& space : testsupport::proven_spaces(f)) {
    std::mt19937_64 rng(17);
    const auto two = f.from_int(2);
    for (int i = 0; i < 100; ++i) {
      auto x = sample_vector(space, rng);
      auto y = sample_vector(space, rng);
      auto z = sample_vector(space, rng);
      auto alpha = f.sample(rng);
      CHECK(space.dot(x, y) == space.dot(y, x));
      auto scaled = vec_add<TestType>(vec_scale<TestType>(alpha, x), z);
      CHECK(space.dot(scaled, y) == alpha * space.dot(x, y) + space.dot(z, y));
      // 2 x.y = h(x+y) - h(x) - h(y)
      CHECK(two * space.dot(x, y) ==
            space.norm(vec_add<TestType>(x, y)) - space.norm(x) - space.norm(y));
    }
  }
}
