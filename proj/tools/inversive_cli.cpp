// Command-line front end: exact cycle geometry, proposition verification
// suites, and SVG figures for rational scenes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inversive/lorentz.hpp"
#include "inversive/ninepoint.hpp"
#include "inversive/pencils.hpp"
#include "inversive/projline.hpp"
#include "inversive/scene.hpp"
#include "inversive/svg.hpp"
#include "inversive/verify.hpp"

namespace {

using namespace inversive;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

template <FieldType F>
QuadSpace<F> make_space(const F& f, const std::string& diag_csv) {
  auto coords = parse_coords(f, diag_csv);
  if (!coords) fail(errc::parse_error, "bad diagonal '" + diag_csv + "'");
  return QuadSpace<F>(f, std::move(*coords));
}

// Cycle literals: "a=1 b=0,0 c=-1" or the dimension-one shorthand "poly A B C".
template <FieldType F>
Cycle<F> parse_cycle_arg(const QuadSpace<F>& space, const std::string& text) {
  const auto& f = space.field();
  auto tokens = detail::split_ws(text);
  if (tokens.empty()) fail(errc::parse_error, "empty cycle literal");
  if (tokens[0] == "poly") {
    if (tokens.size() != 4 || space.dim() != 1) {
      fail(errc::parse_error, "poly form needs three coefficients and a one-dimensional space");
    }
    auto a = f.parse(tokens[1]);
    auto b = f.parse(tokens[2]);
    auto c = f.parse(tokens[3]);
    if (!a || !b || !c) fail(errc::parse_error, "bad poly coefficient in '" + text + "'");
    return Cycle<F>(space, *a, {*b}, *c);
  }
  std::optional<typename F::element_type> a, c;
  std::optional<std::vector<typename F::element_type>> b;
  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected key=value in '" + tok + "'");
    auto key = tok.substr(0, eq);
    auto value = tok.substr(eq + 1);
    if (key == "a") {
      a = f.parse(value);
      if (!a) fail(errc::parse_error, "bad a coefficient '" + value + "'");
    } else if (key == "b") {
      b = parse_coords(f, value);
      if (!b) fail(errc::parse_error, "bad b coefficients '" + value + "'");
    } else if (key == "c") {
      c = f.parse(value);
      if (!c) fail(errc::parse_error, "bad c coefficient '" + value + "'");
    } else {
      fail(errc::parse_error, "unknown cycle key '" + key + "'");
    }
  }
  if (!a || !b || !c) fail(errc::parse_error, "cycle literal needs a=, b=, c=");
  return Cycle<F>(space, *a, std::move(*b), *c);
}

template <FieldType F>
VPoint<F> parse_point_arg(const QuadSpace<F>& space, const std::string& text) {
  auto v = parse_vpoint(space.field(), text, space.dim());
  if (!v) fail(errc::parse_error, "bad point '" + text + "'");
  return *v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << content;
}

int emit_verdicts(const std::vector<Verdict>& verdicts) {
  int failures = 0;
  for (const auto& v : verdicts) {
    nlohmann::json j{{"check", v.check}, {"field", v.field}, {"seed", v.seed}, {"pass", v.pass}};
    if (!v.pass) {
      j["witness"] = v.witness;
      ++failures;
    }
    std::cout << j.dump() << "\n";
  }
  std::cerr << verdicts.size() - failures << "/" << verdicts.size() << " checks passed\n";
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

struct CommonArgs {
  std::string field = "Q";
  std::string diag = "1";
};

template <class Fn>
int with_space(const CommonArgs& args, Fn&& fn) {
  auto field = parse_field_descriptor(args.field);
  return std::visit(
      [&](const auto& f) {
        auto space = make_space(f, args.diag);
        return fn(f, space);
      },
      field);
}

template <FieldType F>
void print_point(const F& f, const VPoint<F>& v) {
  std::cout << vpoint_str(f, v) << "\n";
}

int cmd_ninepoint(const std::string& field_desc, const std::string& m_str,
                  const std::string& n_str, const std::string& p_str, const std::string& svg_path) {
  auto field = parse_field_descriptor(field_desc);
  return std::visit(
      [&](const auto& f) {
        using FT = std::decay_t<decltype(f)>;
        auto coords = [&](const std::string& s) {
          auto c = parse_coords(f, s);
          if (!c || c->size() != 2) fail(errc::parse_error, "bad plane point '" + s + "'");
          return PlanePoint<FT>{(*c)[0], (*c)[1]};
        };
        OrthoConfig<FT> cfg(f, coords(m_str), coords(n_str), coords(p_str));
        std::cout << "T = " << f.str(cfg.t().u) << "," << f.str(cfg.t().v) << "\n";
        auto circle = nine_point_circle(cfg);
        auto cs = center_and_size(circle);
        std::cout << "circle: " << cycle_str(circle) << "\n";
        std::cout << "center = " << coords_str(f, cs.center) << ", size = " << f.str(cs.size)
                  << "\n";
        auto pts = nine_points(cfg);
        bool all_incident = true;
        for (const auto& pt : pts.points) {
          bool on = evaluate(circle, {pt.u, pt.v}) == f.zero();
          all_incident = all_incident && on;
          std::cout << "point " << f.str(pt.u) << "," << f.str(pt.v)
                    << (on ? "  [on circle]" : "  [OFF circle]") << "\n";
        }
        for (const auto& note : pts.omitted) std::cout << "omitted " << note << " (parallel)\n";
        std::cout << "verification: "
                  << (all_incident && pts.omitted.empty() ? "all nine points incident" : "FAILED")
                  << "\n";
        if (!svg_path.empty()) {
          if constexpr (std::is_same_v<FT, RationalField>) {
            SvgScene scene;
            auto dot = [&](const PlanePoint<FT>& pt, const std::string& label) {
              scene.dots.push_back({pt.u.template convert_to<double>(),
                                    pt.v.template convert_to<double>(), label});
            };
            dot(cfg.m(), "M");
            dot(cfg.n(), "N");
            dot(cfg.p(), "P");
            dot(cfg.t(), "T");
            for (const auto& pt : pts.points) dot(pt, "");
            for (const auto& pair : {std::pair{cfg.m(), cfg.n()}, std::pair{cfg.n(), cfg.p()},
                                     std::pair{cfg.m(), cfg.p()}}) {
              auto line = plane::line_through(f, pair.first, pair.second);
              scene.lines.push_back({line.a.template convert_to<double>(),
                                     line.b.template convert_to<double>(),
                                     line.c.template convert_to<double>(), "side"});
            }
            double s = cs.size.template convert_to<double>();
            scene.circles.push_back({cs.center[0].template convert_to<double>(),
                                     cs.center[1].template convert_to<double>(),
                                     s > 0 ? std::sqrt(s) : 0.0, s < 0,
                                     "nine-point circle, size " + f.str(cs.size)});
            write_file(svg_path, render_svg(scene));
            std::cout << "svg written to " << svg_path << "\n";
          } else {
            fail(errc::unrenderable_field, "svg output needs the rational field");
          }
        }
        return all_incident ? kExitPass : kExitCheckFailure;
      },
      field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inversive geometry of anisotropic quadratic spaces"};
  app.require_subcommand(1);

  std::string scene_path, svg_path;
  auto* scene_cmd = app.add_subcommand("scene", "run a scene file");
  scene_cmd->add_option("path", scene_path)->required();
  scene_cmd->add_option("--svg", svg_path);

  auto* render_cmd = app.add_subcommand("render", "render a scene file to SVG");
  std::string render_scene_path, render_out;
  render_cmd->add_option("path", render_scene_path)->required();
  render_cmd->add_option("--svg", render_out)->required();

  std::string suite = "all", verify_field = "Q";
  std::uint64_t seed = 1;
  int count = 100;
  std::int64_t budget = 8;
  auto* verify_cmd = app.add_subcommand("verify", "run proposition verification suites");
  verify_cmd->add_option("--suite", suite);
  verify_cmd->add_option("--field", verify_field);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--count", count);
  verify_cmd->add_option("--budget", budget);

  CommonArgs reflect_args;
  std::string mirror_str, point_str;
  auto* reflect_cmd = app.add_subcommand("reflect", "reflect a point in a non-isotropic cycle");
  reflect_cmd->add_option("--field", reflect_args.field);
  reflect_cmd->add_option("--diag", reflect_args.diag);
  reflect_cmd->add_option("--mirror", mirror_str)->required();
  reflect_cmd->add_option("--point", point_str)->required();

  CommonArgs invert_args;
  std::string circle_str, invert_point_str;
  auto* invert_cmd = app.add_subcommand("invert", "invert a point in a nonzero-size circle");
  invert_cmd->add_option("--field", invert_args.field);
  invert_cmd->add_option("--diag", invert_args.diag);
  invert_cmd->add_option("--circle", circle_str)->required();
  invert_cmd->add_option("--point", invert_point_str)->required();

  CommonArgs pencil_args;
  std::string pencil_mode, pencil_c1, pencil_c2;
  auto* pencil_cmd = app.add_subcommand("pencil", "classify a pencil or list its V-points");
  pencil_cmd->add_option("mode", pencil_mode)->check(CLI::IsMember({"classify", "zeros"}))->required();
  pencil_cmd->add_option("c1", pencil_c1)->required();
  pencil_cmd->add_option("c2", pencil_c2)->required();
  pencil_cmd->add_option("--field", pencil_args.field);
  pencil_cmd->add_option("--diag", pencil_args.diag);
  pencil_cmd->add_option("--budget", budget);

  CommonArgs conj_args;
  std::string conj_mirror, conj_point;
  auto* conj_cmd = app.add_subcommand("conjugate", "conjugate point and span certificate");
  conj_cmd->add_option("--field", conj_args.field);
  conj_cmd->add_option("--diag", conj_args.diag);
  conj_cmd->add_option("--mirror", conj_mirror)->required();
  conj_cmd->add_option("--point", conj_point)->required();

  CommonArgs stereo_args;
  std::string stereo_mode, stereo_cycle;
  std::vector<std::string> stereo_coords;
  auto* stereo_cmd = app.add_subcommand("stereo", "stereographic isometry");
  stereo_cmd->add_option("mode", stereo_mode)->check(CLI::IsMember({"to-cycle", "from-cycle"}))->required();
  stereo_cmd->add_option("--field", stereo_args.field);
  stereo_cmd->add_option("--diag", stereo_args.diag);
  stereo_cmd->add_option("--cycle", stereo_cycle);
  stereo_cmd->add_option("coords", stereo_coords);

  std::string pl_mode, pl_field = "Q", pl_q0, pl_q1;
  std::vector<std::string> pl_quadric;
  auto* pl_cmd = app.add_subcommand("projline", "dimension-one involutions");
  pl_cmd->add_option("mode", pl_mode)->check(CLI::IsMember({"involution", "desargues"}))->required();
  pl_cmd->add_option("--field", pl_field);
  pl_cmd->add_option("--quadric", pl_quadric)->expected(3);
  pl_cmd->add_option("--q0", pl_q0);
  pl_cmd->add_option("--q1", pl_q1);

  std::string np_field = "Q", np_m, np_n, np_p, np_svg;
  auto* np_cmd = app.add_subcommand("ninepoint", "nine-point circle of a triangle");
  np_cmd->add_option("--field", np_field);
  np_cmd->add_option("--M", np_m)->required();
  np_cmd->add_option("--N", np_n)->required();
  np_cmd->add_option("--P", np_p)->required();
  np_cmd->add_option("--svg", np_svg);

  try {
    app.parse(argc, argv);

    if (*scene_cmd) {
      auto run = run_scene_text(read_file(scene_path), !svg_path.empty());
      for (const auto& line : run.output) std::cout << line << "\n";
      if (!svg_path.empty()) write_file(svg_path, run.svg);
      return kExitPass;
    }
    if (*render_cmd) {
      auto run = run_scene_text(read_file(render_scene_path), true);
      write_file(render_out, run.svg);
      std::cout << "svg written to " << render_out << "\n";
      return kExitPass;
    }
    if (*verify_cmd) {
      return emit_verdicts(run_suite_any(suite, verify_field, seed, count, budget));
    }
    if (*reflect_cmd) {
      return with_space(reflect_args, [&](const auto& f, const auto& space) {
        auto mirror = parse_cycle_arg(space, mirror_str);
        print_point(f, reflect_point(mirror, parse_point_arg(space, point_str)));
        return kExitPass;
      });
    }
    if (*invert_cmd) {
      return with_space(invert_args, [&](const auto& f, const auto& space) {
        auto circle = parse_cycle_arg(space, circle_str);
        print_point(f, invert_point(circle, parse_point_arg(space, invert_point_str)));
        return kExitPass;
      });
    }
    if (*pencil_cmd) {
      return with_space(pencil_args, [&](const auto& f, const auto& space) {
        using FT = std::decay_t<decltype(f)>;
        Pencil<FT> pencil(parse_cycle_arg(space, pencil_c1), parse_cycle_arg(space, pencil_c2));
        if (pencil_mode == "classify") {
          auto cls = classify_pencil(pencil);
          std::cout << (cls == PencilClass::singular            ? "singular"
                        : cls == PencilClass::regular_artinian  ? "regular-artinian"
                                                                : "regular-anisotropic")
                    << "\n";
        } else {
          auto zeros = common_zeros(pencil, budget);
          for (const auto& pt : zeros.points) std::cout << vpoint_str(f, pt) << "\n";
          if (!zeros.complete) std::cout << "(bounded search; may be incomplete)\n";
        }
        return kExitPass;
      });
    }
    if (*conj_cmd) {
      return with_space(conj_args, [&](const auto& f, const auto& space) {
        auto mirror = parse_cycle_arg(space, conj_mirror);
        auto res = conjugate(mirror, parse_point_arg(space, conj_point));
        std::cout << vpoint_str(f, res.image);
        if (res.certificate) {
          std::cout << "  certificate: alpha=" << f.str(res.certificate->first)
                    << " beta=" << f.str(res.certificate->second);
        } else {
          std::cout << "  (fixed point)";
        }
        std::cout << "\n";
        return kExitPass;
      });
    }
    if (*stereo_cmd) {
      return with_space(stereo_args, [&](const auto& f, const auto& space) {
        using FT = std::decay_t<decltype(f)>;
        if (stereo_mode == "to-cycle") {
          if (stereo_coords.size() != space.dim() + 2) {
            fail(errc::parse_error, "to-cycle needs x, the vector entries, then z");
          }
          LorentzVec<FT> t;
          auto parse_one = [&](const std::string& s) {
            auto e = f.parse(s);
            if (!e) fail(errc::parse_error, "bad element '" + s + "'");
            return *e;
          };
          t.x = parse_one(stereo_coords.front());
          for (std::size_t i = 1; i + 1 < stereo_coords.size(); ++i) {
            t.y.push_back(parse_one(stereo_coords[i]));
          }
          t.z = parse_one(stereo_coords.back());
          std::cout << cycle_str(stereo_to_cycle(space, t)) << "\n";
        } else {
          if (stereo_cycle.empty()) fail(errc::parse_error, "from-cycle needs --cycle");
          auto l = stereo_from_cycle(parse_cycle_arg(space, stereo_cycle));
          std::cout << f.str(l.x) << " | " << coords_str(f, l.y) << " | " << f.str(l.z) << "\n";
        }
        return kExitPass;
      });
    }
    if (*pl_cmd) {
      auto field = parse_field_descriptor(pl_field);
      return std::visit(
          [&](const auto& f) {
            using FT = std::decay_t<decltype(f)>;
            auto parse_quadric = [&](const std::string& csv) {
              auto c = parse_coords(f, csv);
              if (!c || c->size() != 3) fail(errc::parse_error, "bad quadric '" + csv + "'");
              return BinaryQuadric<FT>(f, (*c)[0], (*c)[1], (*c)[2]);
            };
            Moebius<FT> result = Moebius<FT>::identity(f);
            if (pl_mode == "involution") {
              if (pl_quadric.size() != 3) fail(errc::parse_error, "involution needs --quadric A B C");
              auto parse_one = [&](const std::string& s) {
                auto e = f.parse(s);
                if (!e) fail(errc::parse_error, "bad element '" + s + "'");
                return *e;
              };
              result = polar_involution(BinaryQuadric<FT>(f, parse_one(pl_quadric[0]),
                                                          parse_one(pl_quadric[1]),
                                                          parse_one(pl_quadric[2])));
            } else {
              if (pl_q0.empty() || pl_q1.empty()) fail(errc::parse_error, "desargues needs --q0, --q1");
              result = desargues_involution(parse_quadric(pl_q0), parse_quadric(pl_q1));
            }
            auto e = result.entries();
            std::cout << "[[" << f.str(e[0]) << ", " << f.str(e[1]) << "], [" << f.str(e[2])
                      << ", " << f.str(e[3]) << "]]\n";
            return kExitPass;
          },
          field);
    }
    if (*np_cmd) {
      return cmd_ninepoint(np_field, np_m, np_n, np_p, np_svg);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
