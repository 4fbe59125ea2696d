#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inversive/projline.hpp"

namespace inversive {

template <FieldType F>
struct PlanePoint {
  typename F::element_type u;
  typename F::element_type v;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.u == b.u && a.v == b.v;
  }
};

/// Homogeneous line a u + b v + c w = 0.
template <FieldType F>
struct PlaneLine {
  typename F::element_type a;
  typename F::element_type b;
  typename F::element_type c;
};

template <FieldType F>
struct HomPoint {
  typename F::element_type x;
  typename F::element_type y;
  typename F::element_type w;
};

/// Conic A u^2 + B uv + C v^2 + D uw + E vw + F w^2 in homogeneous (u, v, w).
template <FieldType F>
class Conic {
 public:
  using element_type = typename F::element_type;

  Conic(F field, std::array<element_type, 6> coef) : field_(std::move(field)), coef_(std::move(coef)) {
    bool zero = true;
    for (const auto& c : coef_) zero = zero && c == field_.zero();
    if (zero) fail(errc::zero_function, "zero conic");
  }

  const F& field() const { return field_; }
  const element_type& uu() const { return coef_[0]; }
  const element_type& uv() const { return coef_[1]; }
  const element_type& vv() const { return coef_[2]; }
  const element_type& uw() const { return coef_[3]; }
  const element_type& vw() const { return coef_[4]; }
  const element_type& ww() const { return coef_[5]; }

  Matrix<element_type> matrix() const {
    const auto two = field_.from_int(2);
    return Matrix<element_type>{{coef_[0], coef_[1] / two, coef_[3] / two},
                                {coef_[1] / two, coef_[2], coef_[4] / two},
                                {coef_[3] / two, coef_[4] / two, coef_[5]}};
  }

  element_type eval(const element_type& u, const element_type& v, const element_type& w) const {
    return coef_[0] * u * u + coef_[1] * u * v + coef_[2] * v * v + coef_[3] * u * w +
           coef_[4] * v * w + coef_[5] * w * w;
  }

  bool contains(const PlanePoint<F>& p) const {
    return eval(p.u, p.v, field_.one()) == field_.zero();
  }

 private:
  F field_;
  std::array<element_type, 6> coef_;
};

namespace plane {

template <class K>
K dot2(const std::array<K, 2>& a, const std::array<K, 2>& b) {
  return a[0] * b[0] + a[1] * b[1];
}

template <FieldType F>
std::array<typename F::element_type, 2> direction(const PlanePoint<F>& from, const PlanePoint<F>& to) {
  return {to.u - from.u, to.v - from.v};
}

template <FieldType F>
PlaneLine<F> line_through(const F& f, const PlanePoint<F>& p, const PlanePoint<F>& q) {
  if (p == q) fail(errc::degenerate_input, "line through coincident points");
  (void)f;
  return PlaneLine<F>{p.v - q.v, q.u - p.u, p.u * q.v - q.u * p.v};
}

template <FieldType F>
typename F::element_type line_eval(const PlaneLine<F>& l, const PlanePoint<F>& p,
                                   const typename F::element_type& one) {
  return l.a * p.u + l.b * p.v + l.c * one;
}

template <FieldType F>
HomPoint<F> line_intersection(const PlaneLine<F>& l, const PlaneLine<F>& m) {
  return HomPoint<F>{l.b * m.c - l.c * m.b, l.c * m.a - l.a * m.c, l.a * m.b - l.b * m.a};
}

/// Degenerate conic consisting of the two given lines.
template <FieldType F>
Conic<F> line_pair(const F& f, const PlaneLine<F>& l, const PlaneLine<F>& m) {
  return Conic<F>(f, {l.a * m.a, l.a * m.b + l.b * m.a, l.b * m.b, l.a * m.c + l.c * m.a,
                      l.b * m.c + l.c * m.b, l.c * m.c});
}

}  // namespace plane

/// Common point of the three altitude lines under the standard plane product
/// uu' + vv'. Requires a genuine triangle with no self-orthogonal side
/// direction (which can occur over fields where u^2 + v^2 is isotropic).
template <FieldType F>
PlanePoint<F> orthocenter(const F& f, const PlanePoint<F>& m, const PlanePoint<F>& n,
                          const PlanePoint<F>& p) {
  auto nm = plane::direction(m, n);
  auto pm = plane::direction(m, p);
  if (nm[0] * pm[1] - nm[1] * pm[0] == f.zero()) fail(errc::collinear, "vertices are collinear");
  for (const auto& side : {plane::direction(n, p), plane::direction(m, p), plane::direction(m, n)}) {
    if (plane::dot2(side, side) == f.zero()) {
      fail(errc::degenerate_altitudes, "side direction is self-orthogonal");
    }
  }
  // Altitude from m: (n - p).X = (n - p).m, and similarly from n.
  auto np = plane::direction(p, n);
  auto mp = plane::direction(p, m);
  auto sol = solve_linear(
      f,
      Matrix<typename F::element_type>{{np[0], np[1]}, {mp[0], mp[1]}},
      {np[0] * m.u + np[1] * m.v, mp[0] * n.u + mp[1] * n.v});
  if (!sol) throw std::logic_error("altitudes of a proper triangle failed to meet");
  PlanePoint<F> t{(*sol)[0], (*sol)[1]};
  auto mn = plane::direction(n, m);
  if (!(mn[0] * t.u + mn[1] * t.v == mn[0] * p.u + mn[1] * p.v)) {
    throw std::logic_error("third altitude misses the computed orthocenter");
  }
  return t;
}

/// Triangle with its orthocenter, in general position: the four points form a
/// projective frame.
template <FieldType F>
class OrthoConfig {
 public:
  OrthoConfig(const F& f, PlanePoint<F> m, PlanePoint<F> n, PlanePoint<F> p)
      : field_(f), m_(std::move(m)), n_(std::move(n)), p_(std::move(p)),
        t_(orthocenter(f, m_, n_, p_)) {
    const auto one = f.one();
    for (const auto& [line, label] : {std::pair{plane::line_through(f, m_, n_), "MN"},
                                      std::pair{plane::line_through(f, n_, p_), "NP"},
                                      std::pair{plane::line_through(f, m_, p_), "MP"}}) {
      if (plane::line_eval(line, t_, one) == f.zero()) {
        fail(errc::degenerate_input, std::string("orthocenter lies on side ") + label);
      }
    }
  }

  const F& field() const { return field_; }
  const PlanePoint<F>& m() const { return m_; }
  const PlanePoint<F>& n() const { return n_; }
  const PlanePoint<F>& p() const { return p_; }
  const PlanePoint<F>& t() const { return t_; }

 private:
  F field_;
  PlanePoint<F> m_;
  PlanePoint<F> n_;
  PlanePoint<F> p_;
  PlanePoint<F> t_;
};

/// The two degenerate conics (MT)(NP) and (NT)(MP) generating the pencil of
/// conics through M, N, P, T. Orthogonal line pairs make every member's u^2
/// and v^2 coefficients opposite.
template <FieldType F>
std::pair<Conic<F>, Conic<F>> orthic_pencil(const OrthoConfig<F>& cfg) {
  const auto& f = cfg.field();
  auto q0 = plane::line_pair(f, plane::line_through(f, cfg.m(), cfg.t()),
                             plane::line_through(f, cfg.n(), cfg.p()));
  auto q1 = plane::line_pair(f, plane::line_through(f, cfg.n(), cfg.t()),
                             plane::line_through(f, cfg.m(), cfg.p()));
  return {std::move(q0), std::move(q1)};
}

template <FieldType F>
HomPoint<F> pole_of_line(const Conic<F>& conic, const PlaneLine<F>& line) {
  const auto& f = conic.field();
  auto mat = conic.matrix();
  if (det(f, mat) == f.zero()) fail(errc::degenerate_conic, "pole needs an invertible conic");
  auto sol = solve_linear(f, std::move(mat), {line.a, line.b, line.c});
  return HomPoint<F>{(*sol)[0], (*sol)[1], (*sol)[2]};
}

/// Two distinct points spanning a line, from the kernel of its coefficient row.
template <FieldType F>
std::pair<HomPoint<F>, HomPoint<F>> line_span(const F& f, const PlaneLine<F>& line) {
  auto basis = kernel_basis(f, Matrix<typename F::element_type>{{line.a, line.b, line.c}}, 3);
  if (basis.size() != 2) fail(errc::degenerate_input, "zero line");
  return {HomPoint<F>{basis[0][0], basis[0][1], basis[0][2]},
          HomPoint<F>{basis[1][0], basis[1][1], basis[1][2]}};
}

/// Quadric cut by a conic on a line, in the parameters of line_span.
template <FieldType F>
BinaryQuadric<F> restrict_conic(const Conic<F>& conic, const PlaneLine<F>& line) {
  const auto& f = conic.field();
  auto [p1, p2] = line_span(f, line);
  auto mat = conic.matrix();
  auto apply = [&](const HomPoint<F>& a, const HomPoint<F>& b) {
    auto img = mat_vec(f, mat, {b.x, b.y, b.w});
    return a.x * img[0] + a.y * img[1] + a.w * img[2];
  };
  auto a = apply(p1, p1);
  auto b = f.from_int(2) * apply(p1, p2);
  auto c = apply(p2, p2);
  if (a == f.zero() && b == f.zero() && c == f.zero()) {
    fail(errc::singular_restriction, "line lies on the conic");
  }
  return BinaryQuadric<F>(f, a, b, c);
}

/// Locus of poles of a line with respect to the nondegenerate members of a
/// pencil of conics, interpolated through five poles and certified on a
/// sixth.
template <FieldType F>
Conic<F> eleven_point_conic(const Conic<F>& q0, const Conic<F>& q1, const PlaneLine<F>& line,
                            std::int64_t budget = 24) {
  const auto& f = q0.field();
  auto r0 = restrict_conic(q0, line);
  auto r1 = restrict_conic(q1, line);
  if (!desargues_condition(r0, r1)) {
    fail(errc::singular_restriction, "pencil restricts to a singular pencil on the line");
  }

  std::vector<HomPoint<F>> poles;
  auto push_pole = [&](const Conic<F>& member) {
    auto mat = member.matrix();
    if (det(f, mat) == f.zero()) return;
    auto sol = solve_linear(f, std::move(mat), {line.a, line.b, line.c});
    HomPoint<F> pole{(*sol)[0], (*sol)[1], (*sol)[2]};
    for (const auto& seen : poles) {
      // Projective duplicate test via vanishing cross products.
      if (seen.x * pole.y == seen.y * pole.x && seen.x * pole.w == seen.w * pole.x &&
          seen.y * pole.w == seen.w * pole.y) {
        return;
      }
    }
    poles.push_back(std::move(pole));
  };

  auto member_at = [&](const typename F::element_type& lambda) {
    std::array<typename F::element_type, 6> coef{
        q0.uu() + lambda * q1.uu(), q0.uv() + lambda * q1.uv(), q0.vv() + lambda * q1.vv(),
        q0.uw() + lambda * q1.uw(), q0.vw() + lambda * q1.vw(), q0.ww() + lambda * q1.ww()};
    return coef;
  };

  std::vector<typename F::element_type> lambdas;
  if constexpr (F::finite) {
    for (std::uint64_t i = 0; i < f.order() && static_cast<std::int64_t>(i) < budget; ++i) {
      lambdas.push_back(f.element_at(i));
    }
  } else {
    lambdas.push_back(f.zero());
    for (std::int64_t k = 1; static_cast<std::int64_t>(lambdas.size()) < budget; ++k) {
      lambdas.push_back(f.from_int(k));
      lambdas.push_back(f.from_int(-k));
    }
  }
  for (const auto& lambda : lambdas) {
    auto coef = member_at(lambda);
    bool zero = true;
    for (const auto& c : coef) zero = zero && c == f.zero();
    if (!zero) push_pole(Conic<F>(f, coef));
  }
  push_pole(q1);

  auto pole_row = [&](const HomPoint<F>& p) {
    return std::vector<typename F::element_type>{p.x * p.x, p.x * p.y, p.y * p.y,
                                                 p.x * p.w, p.y * p.w, p.w * p.w};
  };

  // Five poles pin the six coefficients up to scale once the system has full
  // rank; a held-out pole certifies the result whenever the pencil offers one
  // (tiny fields may have exactly five nondegenerate members).
  for (std::size_t used = 5; used <= poles.size(); ++used) {
    Matrix<typename F::element_type> rows;
    for (std::size_t i = 0; i < used; ++i) rows.push_back(pole_row(poles[i]));
    auto kernel = kernel_basis(f, std::move(rows), 6);
    if (kernel.size() != 1) continue;
    Conic<F> conic(f, {kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3], kernel[0][4],
                       kernel[0][5]});
    if (used < poles.size()) {
      const auto& check = poles[used];
      if (!(conic.eval(check.x, check.y, check.w) == f.zero())) {
        throw std::logic_error("certification pole misses the interpolated conic");
      }
    }
    return conic;
  }
  fail(errc::not_enough_samples, "fewer than five independent poles in the pencil");
}

template <FieldType F>
struct NinePointSet {
  // Midpoints of MN, PT, MP, NT, MT, NP, then the intersections MN^PT,
  // MP^NT, MT^NP (omitted when the pair is parallel).
  std::vector<PlanePoint<F>> points;
  std::vector<std::string> omitted;
};

template <FieldType F>
NinePointSet<F> nine_points(const OrthoConfig<F>& cfg) {
  const auto& f = cfg.field();
  const auto half = f.one() / f.from_int(2);
  NinePointSet<F> out;
  auto midpoint = [&](const PlanePoint<F>& a, const PlanePoint<F>& b) {
    return PlanePoint<F>{half * (a.u + b.u), half * (a.v + b.v)};
  };
  out.points.push_back(midpoint(cfg.m(), cfg.n()));
  out.points.push_back(midpoint(cfg.p(), cfg.t()));
  out.points.push_back(midpoint(cfg.m(), cfg.p()));
  out.points.push_back(midpoint(cfg.n(), cfg.t()));
  out.points.push_back(midpoint(cfg.m(), cfg.t()));
  out.points.push_back(midpoint(cfg.n(), cfg.p()));
  const std::array<std::array<PlanePoint<F>, 4>, 3> pairs{{
      {cfg.m(), cfg.n(), cfg.p(), cfg.t()},
      {cfg.m(), cfg.p(), cfg.n(), cfg.t()},
      {cfg.m(), cfg.t(), cfg.n(), cfg.p()},
  }};
  const std::array<const char*, 3> labels{"MN^PT", "MP^NT", "MT^NP"};
  for (std::size_t i = 0; i < 3; ++i) {
    auto l1 = plane::line_through(f, pairs[i][0], pairs[i][1]);
    auto l2 = plane::line_through(f, pairs[i][2], pairs[i][3]);
    auto x = plane::line_intersection(l1, l2);
    if (x.w == f.zero()) {
      out.omitted.emplace_back(labels[i]);
      continue;
    }
    out.points.push_back(PlanePoint<F>{x.x / x.w, x.y / x.w});
  }
  return out;
}

/// The pole locus of the line at infinity over the orthic pencil, re-expressed
/// as a cycle over the standard plane. Its u^2 and v^2 coefficients agree and
/// the uv coefficient vanishes, so it is a circle in the cycle sense.
template <FieldType F>
Cycle<F> nine_point_circle(const OrthoConfig<F>& cfg) {
  const auto& f = cfg.field();
  auto [q0, q1] = orthic_pencil(cfg);
  PlaneLine<F> infinity{f.zero(), f.zero(), f.one()};
  auto conic = eleven_point_conic(q0, q1, infinity);
  if (!(conic.uv() == f.zero()) || !(conic.uu() == conic.vv())) {
    throw std::logic_error("pole locus of the orthic pencil is not a circle");
  }
  QuadSpace<F> space(f, {f.one(), f.one()});
  return Cycle<F>(space, conic.uu(), {conic.uw(), conic.vw()}, conic.ww());
}

}  // namespace inversive
