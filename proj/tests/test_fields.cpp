#include <fstream>
#include <random>

#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;

TEST_CASE("field construction validates its parameters") {
  CHECK_NOTHROW(PrimeField(7));
  CHECK_NOTHROW(PrimeField(101));
  CHECK(thrown_code([] { PrimeField(2); }) == errc::char_two);
  CHECK(thrown_code([] { PrimeField(9); }) == errc::not_prime);
  CHECK(thrown_code([] { PrimeField(1); }) == errc::not_prime);
  CHECK_NOTHROW(QuadExtField(5));
  CHECK_NOTHROW(QuadExtField(-1));
  CHECK_NOTHROW(QuadExtField(-6));
  CHECK(thrown_code([] { QuadExtField(4); }) == errc::is_square);
  CHECK(thrown_code([] { QuadExtField(1); }) == errc::is_square);
  CHECK(thrown_code([] { QuadExtField(0); }) == errc::is_square);
  CHECK(thrown_code([] { QuadExtField(12); }) == errc::not_square_free);
  CHECK(thrown_code([] { QuadExtField(-8); }) == errc::not_square_free);
}

TEST_CASE("field descriptors parse and print") {
  CHECK(field_descriptor(parse_field_descriptor("Q")) == "Q");
  CHECK(field_descriptor(parse_field_descriptor("Fp:7")) == "Fp:7");
  CHECK(field_descriptor(parse_field_descriptor("Qsqrt:5")) == "Qsqrt:5");
  CHECK(thrown_code([] { parse_field_descriptor("R"); }) == errc::parse_error);
  CHECK(thrown_code([] { parse_field_descriptor("Fp:8"); }) == errc::not_prime);
}

TEST_CASE("rational canonical forms are unique") {
  CHECK(make_rat(6, -4) == rq(-3, 2));
  CHECK(make_rat(3, 6) == rq(1, 2));
  CHECK(denominator(make_rat(-8, 2)) == 1);
  CHECK(thrown_code([] { make_rat(1, 0); }) == errc::division_by_zero);
  CHECK(FpElem(-1, 7) == FpElem(6, 7));
  CHECK(FpElem(14, 7) == FpElem(0, 7));
}

TEST_CASE("square testing over the rationals") {
  RationalField f;
  CHECK(f.is_square(rq(4, 9)));
  CHECK(f.is_square(rq(0)));
  CHECK_FALSE(f.is_square(rq(2)));
  CHECK_FALSE(f.is_square(rq(-4)));
  CHECK(*f.sqrt(rq(9, 4)) == rq(3, 2));
  CHECK_FALSE(f.sqrt(rq(2)).has_value());
}

TEST_CASE("square testing in F_7 follows the Euler criterion") {
  PrimeField f(7);
  // 3^((7-1)/2) = 27 = -1 mod 7, so 3 is a non-residue.
  CHECK(detail::mod_pow(3, 3, 7) == 6);
  CHECK_FALSE(f.is_square(f.from_int(3)));
  CHECK(f.is_square(f.from_int(0)));
  CHECK(f.is_square(f.from_int(2)));

  // Exhaustive oracle: the square roots of 2 are exactly {3, 4}.
  std::vector<std::int64_t> roots;
  for (std::int64_t x = 0; x < 7; ++x) {
    if ((x * x) % 7 == 2) roots.push_back(x);
  }
  CHECK(roots == std::vector<std::int64_t>{3, 4});
  CHECK(f.sqrt(f.from_int(2))->value() == 3);  // least residue
}

TEST_CASE("Tonelli-Shanks handles p = 1 mod 4") {
  PrimeField f(13);
  for (std::int64_t v = 0; v < 13; ++v) {
    auto e = f.from_int(v);
    if (!f.is_square(e)) continue;
    auto r = f.sqrt(e);
    REQUIRE(r.has_value());
    CHECK(*r * *r == e);
    CHECK(r->value() <= 13 - r->value());
  }
}

TEST_CASE("quadratic extension square testing reduces to rational tests") {
  QuadExtField f(5);
  auto root5 = f.from_parts(rq(0), rq(1));
  CHECK(f.is_square(f.from_int(5)));
  CHECK(*f.sqrt(f.from_int(5)) == root5);
  CHECK(root5 * root5 == f.from_int(5));
  CHECK_FALSE(f.is_square(root5));
  CHECK_FALSE(f.is_square(f.from_int(2)));
  CHECK(f.is_square(f.zero()));

  QuadExtField gauss(-1);
  auto i = gauss.from_parts(rq(0), rq(1));
  CHECK(gauss.is_square(gauss.from_int(-1)));
  CHECK(*gauss.sqrt(gauss.from_int(-1)) == i);
  CHECK(i * i == gauss.from_int(-1));
}

TEST_CASE("quadratic extension squares cross-checked by brute force") {
  QuadExtField f(5);
  for (int un = -2; un <= 2; ++un) {
    for (int vd = 1; vd <= 2; ++vd) {
      for (int vn = -2; vn <= 2; ++vn) {
        auto e = f.from_parts(rq(un, vd), rq(vn, 2));
        auto sq = e * e;
        CAPTURE(un, vd, vn);
        CHECK(f.is_square(sq));
        auto r = f.sqrt(sq);
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
      }
    }
  }
}

TEMPLATE_TEST_CASE("field axioms hold exactly on samples", "[fields]", RationalField, PrimeField,
                   QuadExtField) {
  auto f = make_field<TestType>();
  SampleStream stream(f, 11);
  for (int i = 0; i < 200; ++i) {
    auto a = stream.next();
    auto b = stream.next();
    auto c = stream.next();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == f.zero());
    CHECK(a + f.zero() == a);
    CHECK(a * f.one() == a);
    if (!(a == f.zero())) {
      CHECK(a * (f.one() / a) == f.one());
    }
    CHECK(f.is_square(a * a));
    auto r = f.sqrt(a * a);
    REQUIRE(r.has_value());
    CHECK(*r * *r == a * a);
  }
}

TEST_CASE("rational ordering respects the ordered-field axioms") {
  RationalField f;
  SampleStream stream(f, 3);
  for (int i = 0; i < 200; ++i) {
    auto a = stream.next();
    auto b = stream.next();
    auto c = stream.next();
    CHECK(f.sign(a * a) >= 0);
    if (f.sign(b - a) >= 0) {
      CHECK(f.sign((b + c) - (a + c)) >= 0);
    }
    if (f.sign(a) >= 0 && f.sign(b) >= 0) {
      CHECK(f.sign(a * b) >= 0);
    }
  }
}

TEST_CASE("sample streams are deterministic") {
  PrimeField f7(7);
  SampleStream a(f7, 1), b(f7, 1);
  for (int i = 0; i < 32; ++i) CHECK(a.next() == b.next());

  RationalField q;
  SampleStream s1(q, 1), s1b(q, 1), s2(q, 2);
  bool diverged = false;
  for (int i = 0; i < 16; ++i) {
    auto x = s1.next();
    CHECK(x == s1b.next());
    if (!(x == s2.next())) diverged = true;
  }
  CHECK(diverged);
}

TEST_CASE("F_7 sample stream matches the golden file") {
  PrimeField f(7);
  SampleStream stream(f, 1);
  std::ifstream golden("tests/golden/sample_stream_fp7_seed1.txt");
  if (!golden.is_open()) golden.open("../tests/golden/sample_stream_fp7_seed1.txt");
  if (!golden.is_open()) golden.open(GOLDEN_DIR "/sample_stream_fp7_seed1.txt");
  REQUIRE(golden.good());
  std::string expected;
  int checked = 0;
  while (std::getline(golden, expected)) {
    CHECK(f.str(stream.next()) == expected);
    ++checked;
  }
  CHECK(checked >= 3);
}

TEMPLATE_TEST_CASE("element strings round-trip through parse", "[fields]", RationalField,
                   PrimeField, QuadExtField) {
  auto f = make_field<TestType>();
  SampleStream stream(f, 5);
  for (int i = 0; i < 50; ++i) {
    auto e = stream.next();
    auto back = f.parse(f.str(e));
    REQUIRE(back.has_value());
    CHECK(*back == e);
  }
}

TEST_CASE("mismatched element contexts are rejected") {
  CHECK(thrown_code([] { return FpElem(1, 7) + FpElem(1, 11); }) == errc::field_mismatch);
  QuadExtField a(5), b(2);
  CHECK(thrown_code([&] { return a.one() + b.one(); }) == errc::field_mismatch);
  PrimeField f(7);
  CHECK(thrown_code([&] { return f.one() / f.zero(); }) == errc::division_by_zero);
}
