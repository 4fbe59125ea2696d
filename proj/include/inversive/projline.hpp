#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inversive/pencils.hpp"
#include "inversive/transforms.hpp"

namespace inversive {

/// Binary quadric A u^2 + B uv + C v^2 on the projective line. The associated
/// symmetric matrix is [[A, B/2], [B/2, C]]; this fixed convention is the one
/// bridge to formulas stated with an even middle coefficient.
template <FieldType F>
class BinaryQuadric {
 public:
  using element_type = typename F::element_type;

  BinaryQuadric(F field, element_type a, element_type b, element_type c)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    const auto zero = field_.zero();
    if (a_ == zero && b_ == zero && c_ == zero) fail(errc::zero_function, "zero quadric");
  }

  const F& field() const { return field_; }
  const element_type& uu() const { return a_; }
  const element_type& uv() const { return b_; }
  const element_type& vv() const { return c_; }

  Matrix<element_type> bilinear_matrix() const {
    const auto two = field_.from_int(2);
    return Matrix<element_type>{{a_, b_ / two}, {b_ / two, c_}};
  }

  /// <q, q> = B^2 - 4AC, which is (-4) times the bilinear determinant.
  element_type norm() const { return b_ * b_ - field_.from_int(4) * a_ * c_; }

  element_type eval(const element_type& u, const element_type& v) const {
    return a_ * u * u + b_ * u * v + c_ * v * v;
  }

  friend bool operator==(const BinaryQuadric& x, const BinaryQuadric& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  F field_;
  element_type a_;
  element_type b_;
  element_type c_;
};

template <FieldType F>
typename F::element_type line_pairing(const BinaryQuadric<F>& f, const BinaryQuadric<F>& g) {
  const auto two = f.field().from_int(2);
  return f.uv() * g.uv() - two * f.uu() * g.vv() - two * f.vv() * g.uu();
}

/// The standard one-dimensional space over f, h(x) = x^2; the setting in
/// which cycles and binary quadrics are identified.
template <FieldType F>
QuadSpace<F> standard_line_space(const F& f) {
  return QuadSpace<F>(f, {f.one()});
}

namespace detail {

template <FieldType F>
void require_standard_line(const QuadSpace<F>& space) {
  if (space.dim() != 1 || !(space.diag()[0] == space.field().one())) {
    fail(errc::dimension_mismatch, "operation requires the standard one-dimensional space");
  }
}

}  // namespace detail

template <FieldType F>
BinaryQuadric<F> quadric_from_cycle(const Cycle<F>& p) {
  detail::require_standard_line(p.space());
  return BinaryQuadric<F>(p.field(), p.quad_coeff(), p.linear_coeff()[0], p.const_coeff());
}

template <FieldType F>
Cycle<F> cycle_from_quadric(const QuadSpace<F>& space, const BinaryQuadric<F>& q) {
  detail::require_standard_line(space);
  return Cycle<F>(space, q.uu(), {q.uv()}, q.vv());
}

/// Fractional linear transformation x -> (ax + b)/(cx + d), ad - bc != 0.
/// Equality of such maps is projective: matrices are compared up to a common
/// nonzero scalar.
template <FieldType F>
class Moebius {
 public:
  using element_type = typename F::element_type;

  Moebius(F field, element_type a, element_type b, element_type c, element_type d)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        d_(std::move(d)) {
    if (det() == field_.zero()) fail(errc::degenerate_input, "singular Moebius matrix");
  }

  static Moebius identity(const F& f) { return Moebius(f, f.one(), f.zero(), f.zero(), f.one()); }

  const F& field() const { return field_; }
  element_type det() const { return a_ * d_ - b_ * c_; }
  std::array<element_type, 4> entries() const { return {a_, b_, c_, d_}; }

  VPoint<F> apply(const VPoint<F>& v) const {
    element_type u = v.infinite ? field_.one() : v.coords[0];
    element_type w = v.infinite ? field_.zero() : field_.one();
    auto u2 = a_ * u + b_ * w;
    auto w2 = c_ * u + d_ * w;
    if (w2 == field_.zero()) return VPoint<F>::at_infinity();
    return VPoint<F>::finite({u2 / w2});
  }

  friend Moebius operator*(const Moebius& m, const Moebius& n) {
    return Moebius(m.field_, m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                   m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
  }

 private:
  F field_;
  element_type a_;
  element_type b_;
  element_type c_;
  element_type d_;
};

template <FieldType F>
bool proj_equal(const Moebius<F>& m, const Moebius<F>& n) {
  auto me = m.entries();
  auto ne = n.entries();
  const auto zero = m.field().zero();
  std::size_t lead = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(me[i] == zero)) {
      lead = i;
      break;
    }
  }
  if (ne[lead] == zero) return false;
  auto scale = ne[lead] / me[lead];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(ne[i] == scale * me[i])) return false;
  }
  return true;
}

template <FieldType F>
VPoint<F> moebius_apply(const Moebius<F>& m, const VPoint<F>& v) {
  return m.apply(v);
}

/// Unique Moebius map with prescribed images of three distinct points.
template <FieldType F>
Moebius<F> moebius_through(const F& f, const std::array<VPoint<F>, 3>& src,
                           const std::array<VPoint<F>, 3>& dst) {
  auto hom = [&](const VPoint<F>& v) -> std::pair<typename F::element_type, typename F::element_type> {
    if (v.infinite) return {f.one(), f.zero()};
    return {v.coords[0], f.one()};
  };
  // Matrix sending (1:0), (0:1), (1:1) to p1, p3, p2.
  auto standard = [&](const std::array<VPoint<F>, 3>& pts) {
    auto [u1, w1] = hom(pts[0]);
    auto [u2, w2] = hom(pts[1]);
    auto [u3, w3] = hom(pts[2]);
    auto sol = solve_linear(f, Matrix<typename F::element_type>{{u1, u3}, {w1, w3}}, {u2, w2});
    if (!sol) throw std::logic_error("degenerate point triple");
    return Moebius<F>(f, (*sol)[0] * u1, (*sol)[1] * u3, (*sol)[0] * w1, (*sol)[1] * w3);
  };
  auto ts = standard(src);
  auto td = standard(dst);
  auto e = ts.entries();
  Moebius<F> ts_inv(f, e[3], -e[1], -e[2], e[0]);
  return td * ts_inv;
}

/// Moebius form of a single reflection of the standard line: a line cycle
/// Bx + C acts by x -> -x - 2C/B, a circle with center m and size s by
/// x -> m + s/(x - m).
template <FieldType F>
Moebius<F> reflection_to_moebius(const Cycle<F>& mirror) {
  detail::require_standard_line(mirror.space());
  const auto& f = mirror.field();
  auto cls = classify(mirror);
  if (cls.kind == CycleKind::line) {
    auto b = mirror.linear_coeff()[0];
    auto c = mirror.const_coeff();
    return Moebius<F>(f, -b, -f.from_int(2) * c, f.zero(), b);
  }
  if (cls.kind != CycleKind::circle || cls.zero_size) {
    fail(errc::isotropic_mirror, "mirror must be a line or a nonzero-size circle");
  }
  auto cs = center_and_size(mirror);
  const auto& m = cs.center[0];
  return Moebius<F>(f, m, cs.size - m * m, f.one(), -m);
}

/// Word composed first-to-last into a single fractional linear map.
template <FieldType F>
Moebius<F> word_to_moebius(const F& f, const InversiveWord<F>& word) {
  auto acc = Moebius<F>::identity(f);
  for (const auto& r : word) acc = reflection_to_moebius(r.mirror()) * acc;
  return acc;
}

/// Polar conjugation by a proper quadric: (u : v) maps to the kernel of the
/// polarized form, x -> (-(B/2)x - C) / (Ax + B/2).
template <FieldType F>
Moebius<F> polar_involution(const BinaryQuadric<F>& q) {
  const auto& f = q.field();
  if (q.norm() == f.zero()) fail(errc::degenerate_quadric, "polar involution needs a proper quadric");
  const auto two = f.from_int(2);
  return Moebius<F>(f, -q.uv(), -two * q.vv(), two * q.uu(), q.uv());
}

template <FieldType F>
bool desargues_condition(const BinaryQuadric<F>& q0, const BinaryQuadric<F>& q1) {
  auto g00 = line_pairing(q0, q0);
  auto g01 = line_pairing(q0, q1);
  auto g11 = line_pairing(q1, q1);
  return !(g00 * g11 - g01 * g01 == q0.field().zero());
}

/// Involution cutting conjugate pairs on the line out of a regular pencil of
/// quadrics: the hyperplane reflection whose mirror spans the pencil's
/// orthocomplement, recovered from its action on three points.
template <FieldType F>
Moebius<F> desargues_involution(const BinaryQuadric<F>& q0, const BinaryQuadric<F>& q1) {
  const auto& f = q0.field();
  if (!desargues_condition(q0, q1)) {
    fail(errc::singular_pencil, "pencil of quadrics is singular on the line");
  }
  const auto two = f.from_int(2);
  Matrix<typename F::element_type> rows{
      {-two * q0.vv(), q0.uv(), -two * q0.uu()},
      {-two * q1.vv(), q1.uv(), -two * q1.uu()},
  };
  auto kernel = kernel_basis(f, std::move(rows), 3);
  if (kernel.size() != 1) throw std::logic_error("regular pencil with degenerate complement");
  auto space = standard_line_space(f);
  auto mirror = Cycle<F>(space, kernel[0][0], {kernel[0][1]}, kernel[0][2]);
  std::array<VPoint<F>, 3> src{VPoint<F>::finite({f.zero()}), VPoint<F>::finite({f.one()}),
                               VPoint<F>::at_infinity()};
  std::array<VPoint<F>, 3> dst{reflect_point(mirror, src[0]), reflect_point(mirror, src[1]),
                               reflect_point(mirror, src[2])};
  return moebius_through(f, src, dst);
}

}  // namespace inversive
