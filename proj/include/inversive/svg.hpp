#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace inversive {

/// Float-approximated drawables for display. Exact values travel alongside as
/// text notes; nothing here participates in verification.
struct SvgScene {
  struct Circle {
    double cx, cy, r;
    bool imaginary = false;  // empty real locus: drawn dashed at its center
    std::string note;
  };
  struct Line {
    double a, b, c;  // a x + b y + c = 0
    std::string note;
  };
  struct Dot {
    double x, y;
    std::string label;
  };

  std::vector<Circle> circles;
  std::vector<Line> lines;
  std::vector<Dot> dots;
};

inline std::string render_svg(const SvgScene& scene) {
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  auto grow = [&](double x, double y, double pad) {
    lo_x = std::min(lo_x, x - pad);
    hi_x = std::max(hi_x, x + pad);
    lo_y = std::min(lo_y, y - pad);
    hi_y = std::max(hi_y, y + pad);
  };
  for (const auto& c : scene.circles) grow(c.cx, c.cy, c.r + 0.5);
  for (const auto& d : scene.dots) grow(d.x, d.y, 0.5);

  const double width = 640.0;
  double span_x = hi_x - lo_x, span_y = hi_y - lo_y;
  double scale = width / std::max(span_x, span_y);
  double height = span_y * scale;
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return height - (y - lo_y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& l : scene.lines) {
    // Clip a x + b y + c = 0 against the view rectangle.
    std::vector<std::pair<double, double>> pts;
    auto consider = [&](double x, double y) {
      if (x >= lo_x - 1e-9 && x <= hi_x + 1e-9 && y >= lo_y - 1e-9 && y <= hi_y + 1e-9) {
        pts.emplace_back(x, y);
      }
    };
    if (std::abs(l.b) > 1e-12) {
      consider(lo_x, (-l.c - l.a * lo_x) / l.b);
      consider(hi_x, (-l.c - l.a * hi_x) / l.b);
    }
    if (std::abs(l.a) > 1e-12) {
      consider((-l.c - l.b * lo_y) / l.a, lo_y);
      consider((-l.c - l.b * hi_y) / l.a, hi_y);
    }
    if (pts.size() >= 2) {
      svg << "  <line x1=\"" << sx(pts[0].first) << "\" y1=\"" << sy(pts[0].second) << "\" x2=\""
          << sx(pts[1].first) << "\" y2=\"" << sy(pts[1].second)
          << "\" stroke=\"steelblue\" stroke-width=\"1.5\"><title>" << l.note
          << "</title></line>\n";
    }
  }

  for (const auto& c : scene.circles) {
    if (c.imaginary) {
      svg << "  <circle cx=\"" << sx(c.cx) << "\" cy=\"" << sy(c.cy) << "\" r=\"" << c.r * scale
          << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6 4\"><title>imaginary circle "
          << c.note << "</title></circle>\n";
      svg << "  <text x=\"" << sx(c.cx) << "\" y=\"" << sy(c.cy)
          << "\" font-size=\"11\" fill=\"gray\">imaginary circle</text>\n";
    } else {
      svg << "  <circle cx=\"" << sx(c.cx) << "\" cy=\"" << sy(c.cy) << "\" r=\"" << c.r * scale
          << "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"><title>" << c.note
          << "</title></circle>\n";
    }
  }

  for (const auto& d : scene.dots) {
    svg << "  <circle cx=\"" << sx(d.x) << "\" cy=\"" << sy(d.y)
        << "\" r=\"3\" fill=\"black\"/>\n";
    if (!d.label.empty()) {
      svg << "  <text x=\"" << sx(d.x) + 5 << "\" y=\"" << sy(d.y) - 5 << "\" font-size=\"12\">"
          << d.label << "</text>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace inversive
