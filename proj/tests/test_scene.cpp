#include "inversive/scene.hpp"
#include "inversive/verify.hpp"
#include "test_support.hpp"

using namespace inversive;
using testsupport::make_field;
using testsupport::rq;
using testsupport::thrown_code;

namespace {

bool output_contains(const SceneRun& run, const std::string& needle) {
  for (const auto& line : run.output) {
    if (line.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("scenes execute declarations in order") {
  auto run = run_scene_text(
      "# inversion demo\n"
      "field Q\n"
      "space diag 1\n"
      "cycle c1 = 1 | 0 | -1\n"
      "point p1 = 2\n"
      "op invert c1 p1\n"
      "op classify c1\n"
      "op pairing c1 c1\n");
  CHECK(output_contains(run, "op invert c1 p1 = 1/2"));
  CHECK(output_contains(run, "op classify c1 = circle"));
  CHECK(output_contains(run, "op pairing c1 c1 = 4"));
}

TEST_CASE("scene ops cover the pencil and conjugate surface") {
  auto run = run_scene_text(
      "field Q\n"
      "space diag 1\n"
      "cycle a = 1 | 0 | 1\n"
      "cycle b = 0 | 1 | 0\n"
      "point m = 2\n"
      "op pencil a b\n"
      "op conjugate a m\n"
      "op center a\n"
      "op stereo-from a\n"
      "op reflect b m\n");
  CHECK(output_contains(run, "op pencil a b = regular-artinian zeros [1; -1]"));
  CHECK(output_contains(run, "op conjugate a m = -1/2 certificate"));
  CHECK(output_contains(run, "op center a = 0 size -1"));
  CHECK(output_contains(run, "op stereo-from a = 0 | 0 | 2"));
  CHECK(output_contains(run, "op reflect b m = -2"));
}

TEST_CASE("scenes run over finite and extension fields") {
  auto run = run_scene_text(
      "field Fp:7\n"
      "space diag 1 1\n"
      "cycle c = 1 | 0 0 | -1\n"
      "point v = 2,0\n"
      "op invert c v\n");
  CHECK(output_contains(run, "op invert c v = 4,0"));

  auto ext = run_scene_text(
      "field Qsqrt:5\n"
      "space diag 1\n"
      "cycle c = 1 | 0 | -5\n"
      "point v = (0,1)\n"
      "op evaluate c v\n");
  CHECK(output_contains(ext, "op evaluate c v = (0,0)"));
}

TEST_CASE("scene errors carry line numbers and operation names") {
  auto parse_err = [](const std::string& text) {
    try {
      run_scene_text(text);
    } catch (const error& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  auto msg = parse_err("field Q\nspace diag 1\nwhat now\n");
  CHECK(msg.find("ParseError") != std::string::npos);
  CHECK(msg.find("line 3") != std::string::npos);

  CHECK(parse_err("cycle c = 1 | 0 | -1\n").find("field") != std::string::npos);
  CHECK(parse_err("field Q\ncycle c = 1 | 0 | -1\n").find("no space") != std::string::npos);
  CHECK(parse_err("field Q\nspace diag 1\nop invert missing x\n").find("line 3") !=
        std::string::npos);

  // Domain errors surface with the operation name.
  auto domain = parse_err(
      "field Q\nspace diag 1\ncycle z = 1 | -2 | 1\npoint p = 0\nop invert z p\n");
  CHECK(domain.find("ZeroSizeCircle") != std::string::npos);
  CHECK(domain.find("op invert") != std::string::npos);
}

TEST_CASE("empty scenes are empty reports") {
  auto run = run_scene_text("");
  CHECK(run.output.empty());
  CHECK(run_scene_text("# nothing but comments\n").output.empty());
}

TEMPLATE_TEST_CASE("printed cycles re-parse to equal objects", "[scene]", RationalField,
                   PrimeField, QuadExtField) {
  auto f = make_field<TestType>();
  for (const auto& space : testsupport::proven_spaces(f)) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
      auto p = sample_cycle(space, rng);
      // Rebuild through the scene syntax "a | b... | c".
      std::string text = "field " + f.descriptor() + "\nspace diag";
      for (const auto& dcoef : space.diag()) text += " " + f.str(dcoef);
      text += "\ncycle c = " + cycle_str(p) + "\n";
      auto run = run_scene_text(text);
      REQUIRE(run.output.size() == 1);
      CHECK(run.output[0] == "cycle c = " + cycle_str(p));

      auto v = sample_vpoint(space, rng);
      auto reparsed = parse_vpoint(f, vpoint_str(f, v), space.dim());
      REQUIRE(reparsed.has_value());
      CHECK(*reparsed == v);
    }
  }
}

TEST_CASE("verify runner is deterministic and rejects unknown suites") {
  auto a = run_suite_any("pairing", "Fp:7", 5, 25);
  auto b = run_suite_any("pairing", "Fp:7", 5, 25);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == b[i].check);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].witness == b[i].witness);
  }
  CHECK(thrown_code([] { run_suite_any("nonsense", "Q", 1, 10); }) == errc::unknown_suite);
}

TEST_CASE("rational scenes render to SVG") {
  auto run = run_scene_text(
      "field Q\n"
      "space diag 1 1\n"
      "cycle real = 1 | -3 0 | 1\n"
      "cycle imaginary = 1 | 0 0 | 1\n"
      "cycle edge = 0 | 1 1 | -2\n"
      "point p = 1,1\n",
      true);
  CHECK(run.svg.find("<svg") != std::string::npos);
  CHECK(run.svg.find("imaginary circle") != std::string::npos);
  CHECK(run.svg.find("<line") != std::string::npos);
  CHECK(run.svg.find("crimson") != std::string::npos);

  CHECK(thrown_code([] {
          run_scene_text("field Fp:7\nspace diag 1\ncycle c = 1 | 0 | -1\n", true);
        }) == errc::unrenderable_field);
}
