#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inversive/lorentz.hpp"
#include "inversive/pencils.hpp"
#include "inversive/svg.hpp"
#include "inversive/transforms.hpp"

namespace inversive {

// ---- printable forms (scene syntax round-trips through these) ----

template <FieldType F>
std::string coords_str(const F& f, const std::vector<typename F::element_type>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f.str(v[i]);
  }
  return out;
}

template <FieldType F>
std::string vpoint_str(const F& f, const VPoint<F>& v) {
  return v.infinite ? "inf" : coords_str(f, v.coords);
}

/// "a | b1 b2 ... | c"
template <FieldType F>
std::string cycle_str(const Cycle<F>& p) {
  const auto& f = p.field();
  std::string out = f.str(p.quad_coeff()) + " |";
  for (const auto& b : p.linear_coeff()) out += " " + f.str(b);
  out += " | " + f.str(p.const_coeff());
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view sv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : sv) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Splits on commas outside parentheses, so quadratic-extension pairs survive.
inline std::vector<std::string> split_top_commas(std::string_view sv) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : sv) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

template <FieldType F>
std::optional<std::vector<typename F::element_type>> parse_coords(const F& f, std::string_view sv) {
  std::vector<typename F::element_type> out;
  for (const auto& part : detail::split_top_commas(sv)) {
    auto e = f.parse(part);
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  return out;
}

template <FieldType F>
std::optional<VPoint<F>> parse_vpoint(const F& f, std::string_view sv, std::size_t dim) {
  if (sv == "inf") return VPoint<F>::at_infinity();
  auto coords = parse_coords(f, sv);
  if (!coords || coords->size() != dim) return std::nullopt;
  return VPoint<F>::finite(std::move(*coords));
}

struct SceneRun {
  std::vector<std::string> output;
  std::string svg;  // nonempty only when rendering was requested
};

namespace detail {

template <FieldType F>
class SceneInterp {
 public:
  explicit SceneInterp(F field) : field_(std::move(field)) {}

  void line(std::size_t no, const std::string& raw) {
    auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0][0] == '#') return;
    const auto& head = tokens[0];
    if (head == "field") {
      err(no, "field already declared");
    } else if (head == "space") {
      handle_space(no, tokens);
    } else if (head == "cycle") {
      handle_cycle(no, raw, tokens);
    } else if (head == "point") {
      handle_point(no, raw, tokens);
    } else if (head == "op") {
      handle_op(no, tokens);
    } else {
      err(no, "unknown directive '" + head + "'");
    }
  }

  const std::vector<std::string>& output() const { return out_; }

  std::string render() const {
    if constexpr (std::is_same_v<F, RationalField>) {
      SvgScene scene;
      for (const auto& [name, p] : cycles_) add_cycle_drawable(scene, name, p);
      for (const auto& [name, v] : points_) {
        if (v.infinite) continue;
        auto xy = to_xy(v.coords);
        scene.dots.push_back({xy.first, xy.second, name});
      }
      return render_svg(scene);
    } else {
      fail(errc::unrenderable_field, "only rational scenes are renderable");
    }
  }

 private:
  [[noreturn]] void err(std::size_t no, const std::string& what) const {
    fail(errc::parse_error, "line " + std::to_string(no) + ": " + what);
  }

  const QuadSpace<F>& space(std::size_t no) const {
    if (!space_) err(no, "no space declared");
    return *space_;
  }

  void handle_space(std::size_t no, const std::vector<std::string>& tokens) {
    if (space_) err(no, "space already declared");
    if (tokens.size() < 3 || tokens[1] != "diag") err(no, "expected: space diag d1 [d2 ...]");
    std::vector<typename F::element_type> diag;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      auto e = field_.parse(tokens[i]);
      if (!e) err(no, "bad element '" + tokens[i] + "'");
      diag.push_back(*e);
    }
    space_.emplace(field_, std::move(diag));
  }

  void handle_cycle(std::size_t no, const std::string& raw, const std::vector<std::string>& tokens) {
    if (tokens.size() < 3 || tokens[2] != "=") err(no, "expected: cycle <name> = a | b... | c");
    const auto& name = tokens[1];
    check_fresh(no, name);
    auto eq = raw.find('=');
    std::string rhs = raw.substr(eq + 1);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : rhs) {
      if (ch == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 3) err(no, "cycle needs three |-separated groups");
    auto trim = [](const std::string& s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto a = field_.parse(trim(parts[0]));
    auto c = field_.parse(trim(parts[2]));
    auto bs = split_ws(parts[1]);
    if (!a || !c) err(no, "bad coefficient");
    std::vector<typename F::element_type> b;
    for (const auto& t : bs) {
      auto e = field_.parse(t);
      if (!e) err(no, "bad coefficient '" + t + "'");
      b.push_back(*e);
    }
    cycles_.emplace(name, Cycle<F>(space(no), *a, std::move(b), *c));
    out_.push_back("cycle " + name + " = " + cycle_str(cycles_.at(name)));
  }

  void handle_point(std::size_t no, const std::string& raw, const std::vector<std::string>& tokens) {
    if (tokens.size() != 4 || tokens[2] != "=") err(no, "expected: point <name> = coords|inf");
    const auto& name = tokens[1];
    check_fresh(no, name);
    auto v = parse_vpoint(field_, tokens[3], space(no).dim());
    (void)raw;
    if (!v) err(no, "bad point '" + tokens[3] + "'");
    points_.emplace(name, std::move(*v));
    out_.push_back("point " + name + " = " + vpoint_str(field_, points_.at(name)));
  }

  const Cycle<F>& cyc(std::size_t no, const std::string& name) const {
    auto it = cycles_.find(name);
    if (it == cycles_.end()) err(no, "unknown cycle '" + name + "'");
    return it->second;
  }

  const VPoint<F>& pt(std::size_t no, const std::string& name) const {
    auto it = points_.find(name);
    if (it == points_.end()) err(no, "unknown point '" + name + "'");
    return it->second;
  }

  void check_fresh(std::size_t no, const std::string& name) const {
    if (cycles_.count(name) || points_.count(name)) err(no, "name '" + name + "' already in use");
  }

  void handle_op(std::size_t no, const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) err(no, "empty op");
    const auto& verb = tokens[1];
    std::string head = "op";
    for (std::size_t i = 1; i < tokens.size(); ++i) head += " " + tokens[i];
    try {
      out_.push_back(head + " = " + run_op(no, verb, tokens));
    } catch (const error& e) {
      if (e.code() == errc::parse_error) throw;
      fail(e.code(), std::string("op ") + verb + " (line " + std::to_string(no) + "): " + e.what());
    }
  }

  std::string run_op(std::size_t no, const std::string& verb, const std::vector<std::string>& t) {
    const auto& f = field_;
    if (verb == "pairing" && t.size() == 4) return f.str(pairing(cyc(no, t[2]), cyc(no, t[3])));
    if (verb == "classify" && t.size() == 3) {
      auto cls = classify(cyc(no, t[2]));
      if (cls.kind == CycleKind::constant) return "constant";
      if (cls.kind == CycleKind::line) return "line";
      return cls.zero_size ? "circle zero-size" : "circle";
    }
    if (verb == "center" && t.size() == 3) {
      auto cs = center_and_size(cyc(no, t[2]));
      return coords_str(f, cs.center) + " size " + f.str(cs.size);
    }
    if (verb == "evaluate" && t.size() == 4) {
      return f.str(evaluate(cyc(no, t[2]), pt(no, t[3]).coords));
    }
    if (verb == "reflect" && t.size() == 4) {
      if (cycles_.count(t[3])) return cycle_str(reflect(cyc(no, t[2]), cyc(no, t[3])));
      return vpoint_str(f, reflect_point(cyc(no, t[2]), pt(no, t[3])));
    }
    if (verb == "invert" && t.size() == 4) {
      return vpoint_str(f, invert_point(cyc(no, t[2]), pt(no, t[3])));
    }
    if (verb == "conjugate" && t.size() == 4) {
      auto res = conjugate(cyc(no, t[2]), pt(no, t[3]));
      if (!res.certificate) return vpoint_str(f, res.image) + " fixed";
      return vpoint_str(f, res.image) + " certificate " + f.str(res.certificate->first) + " " +
             f.str(res.certificate->second);
    }
    if (verb == "pencil" && t.size() == 4) {
      Pencil<F> pencil(cyc(no, t[2]), cyc(no, t[3]));
      auto cls = classify_pencil(pencil);
      std::string name = cls == PencilClass::singular ? "singular"
                         : cls == PencilClass::regular_artinian ? "regular-artinian"
                                                                : "regular-anisotropic";
      auto zeros = common_zeros(pencil);
      std::string pts = "[";
      for (std::size_t i = 0; i < zeros.points.size(); ++i) {
        if (i) pts += "; ";
        pts += vpoint_str(f, zeros.points[i]);
      }
      pts += "]";
      return name + " zeros " + pts + (zeros.complete ? "" : " (bounded search)");
    }
    if (verb == "stereo-from" && t.size() == 3) {
      auto l = stereo_from_cycle(cyc(no, t[2]));
      return f.str(l.x) + " | " + coords_str(f, l.y) + " | " + f.str(l.z);
    }
    err(no, "unknown op '" + verb + "'");
  }

  std::pair<double, double> to_xy(const std::vector<Rat>& coords) const {
    double x = coords.empty() ? 0.0 : coords[0].template convert_to<double>();
    double y = coords.size() > 1 ? coords[1].template convert_to<double>() : 0.0;
    return {x, y};
  }

  void add_cycle_drawable(SvgScene& scene, const std::string& name, const Cycle<F>& p) const {
    if constexpr (std::is_same_v<F, RationalField>) {
      if (p.space().dim() > 2) return;
      auto cls = classify(p);
      if (cls.kind == CycleKind::constant) return;
      if (cls.kind == CycleKind::line) {
        double a = p.linear_coeff()[0].template convert_to<double>();
        double b = p.space().dim() > 1 ? p.linear_coeff()[1].template convert_to<double>() : 0.0;
        double c = p.const_coeff().template convert_to<double>();
        scene.lines.push_back({a, b, c, name + ": " + cycle_str(p)});
        return;
      }
      auto cs = center_and_size(p);
      auto xy = to_xy(cs.center);
      double s = cs.size.template convert_to<double>();
      std::string note = name + ": center " + coords_str(field_, cs.center) + " size " +
                         field_.str(cs.size);
      if (cs.size == field_.zero()) {
        scene.dots.push_back({xy.first, xy.second, name});
      } else if (s > 0) {
        scene.circles.push_back({xy.first, xy.second, std::sqrt(s), false, note});
      } else {
        scene.circles.push_back({xy.first, xy.second, std::sqrt(-s), true, note});
      }
    }
  }

  F field_;
  std::optional<QuadSpace<F>> space_;
  std::map<std::string, Cycle<F>> cycles_;
  std::map<std::string, VPoint<F>> points_;
  std::vector<std::string> out_;
};

}  // namespace detail

/// Executes a scene: one declaration or operation per line, '#' comments
/// allowed, unknown directives rejected with their line number.
inline SceneRun run_scene_text(const std::string& text, bool want_svg = false) {
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  std::optional<AnyField> field;
  std::vector<std::pair<std::size_t, std::string>> body;
  while (std::getline(in, raw)) {
    ++no;
    auto tokens = detail::split_ws(raw);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!field) {
      if (tokens[0] != "field" || tokens.size() != 2) {
        fail(errc::parse_error, "line " + std::to_string(no) + ": expected 'field <descriptor>'");
      }
      field = parse_field_descriptor(tokens[1]);
      continue;
    }
    body.emplace_back(no, raw);
  }
  SceneRun run;
  if (!field) return run;
  std::visit(
      [&](const auto& f) {
        detail::SceneInterp<std::decay_t<decltype(f)>> interp(f);
        for (const auto& [line_no, line] : body) interp.line(line_no, line);
        run.output = interp.output();
        if (want_svg) run.svg = interp.render();
      },
      *field);
  return run;
}

}  // namespace inversive
