#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inversive/cycles.hpp"
#include "inversive/linalg.hpp"

namespace inversive {

/// Hyperplane reflection of the cycle space, determined by a non-isotropic
/// mirror cycle.
template <FieldType F>
class Reflection {
 public:
  explicit Reflection(Cycle<F> mirror) : mirror_(std::move(mirror)) {
    if (pairing(mirror_, mirror_) == mirror_.field().zero()) {
      fail(errc::isotropic_mirror, "reflection mirror must be non-isotropic");
    }
  }

  const Cycle<F>& mirror() const { return mirror_; }

 private:
  Cycle<F> mirror_;
};

template <FieldType F>
using InversiveWord = std::vector<Reflection<F>>;

/// R(x) = x - 2<x,p>/<p,p> p.
template <FieldType F>
Cycle<F> reflect(const Cycle<F>& mirror, const Cycle<F>& x) {
  const auto& f = mirror.field();
  auto pp = pairing(mirror, mirror);
  if (pp == f.zero()) fail(errc::isotropic_mirror, "reflection mirror must be non-isotropic");
  auto factor = f.from_int(2) * pairing(x, mirror) / pp;
  auto xc = x.coords();
  auto mc = mirror.coords();
  for (std::size_t i = 0; i < xc.size(); ++i) xc[i] = xc[i] - factor * mc[i];
  return Cycle<F>::from_coords(x.space(), xc);
}

/// Action of the reflection on V, through embedding and extraction.
template <FieldType F>
VPoint<F> reflect_point(const Cycle<F>& mirror, const VPoint<F>& v) {
  return point_extract(reflect(mirror, point_embed(mirror.space(), v)));
}

/// Direct affine reflection across the hyperplane Z(L): fixes infinity and
/// sends x to x - 2 b L(x) / b.b.
template <FieldType F>
VPoint<F> affine_reflect(const Cycle<F>& line, const VPoint<F>& v) {
  const auto& f = line.field();
  if (classify(line).kind != CycleKind::line) {
    fail(errc::degenerate_input, "affine reflection requires a linear cycle");
  }
  if (v.infinite) return v;
  auto bb = line.space().norm(line.linear_coeff());
  if (bb == f.zero()) {
    fail(errc::isotropic_vector_encountered, "line direction has norm zero");
  }
  auto lx = evaluate(line, v.coords);
  auto image = vec_sub<F>(v.coords, vec_scale<F>(f.from_int(2) * lx / bb, line.linear_coeff()));
  return VPoint<F>::finite(std::move(image));
}

/// Direct inversion in a circle of nonzero size: center and infinity swap,
/// and x - b is rescaled so that (x - b).(x' - b) = s.
template <FieldType F>
VPoint<F> invert_point(const Cycle<F>& circle, const VPoint<F>& v) {
  const auto& f = circle.field();
  if (classify(circle).kind != CycleKind::circle) {
    fail(errc::not_a_circle, "inversion requires a quadratic cycle");
  }
  auto cs = center_and_size(circle);
  if (cs.size == f.zero()) fail(errc::zero_size_circle, "inversion in a zero-size circle");
  if (v.infinite) return VPoint<F>::finite(cs.center);
  if (v.coords == cs.center) return VPoint<F>::at_infinity();
  auto diff = vec_sub<F>(v.coords, cs.center);
  auto w = circle.space().norm(diff);
  if (w == f.zero()) {
    fail(errc::isotropic_vector_encountered, "point at isotropic offset from the center");
  }
  auto image = vec_add<F>(cs.center, vec_scale<F>(cs.size / w, diff));
  return VPoint<F>::finite(std::move(image));
}

/// Exact (n+2)x(n+2) matrix acting on cycle coordinates (a, b_1..b_n, c).
template <FieldType F>
class CycleMatrix {
 public:
  using element_type = typename F::element_type;

  CycleMatrix(QuadSpace<F> space, Matrix<element_type> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}

  static CycleMatrix identity(const QuadSpace<F>& space) {
    return CycleMatrix(space, identity_matrix(space.field(), space.dim() + 2));
  }

  const QuadSpace<F>& space() const { return space_; }
  const Matrix<element_type>& entries() const { return entries_; }

  Cycle<F> apply(const Cycle<F>& x) const {
    return Cycle<F>::from_coords(space_, mat_vec(space_.field(), entries_, x.coords()));
  }

  /// Induced action on V; the matrix must preserve isotropy for this to land.
  VPoint<F> apply(const VPoint<F>& v) const {
    return point_extract(apply(point_embed(space_, v)));
  }

  friend CycleMatrix operator*(const CycleMatrix& a, const CycleMatrix& b) {
    return CycleMatrix(a.space_, mat_mul(a.space_.field(), a.entries_, b.entries_));
  }

 private:
  QuadSpace<F> space_;
  Matrix<element_type> entries_;
};

template <FieldType F>
CycleMatrix<F> reflection_matrix(const Cycle<F>& mirror) {
  auto basis = canonical_basis(mirror.space());
  std::size_t m = basis.size();
  Matrix<typename F::element_type> entries(m,
      std::vector<typename F::element_type>(m, mirror.field().zero()));
  for (std::size_t j = 0; j < m; ++j) {
    auto image = reflect(mirror, basis[j]).coords();
    for (std::size_t i = 0; i < m; ++i) entries[i][j] = image[i];
  }
  return CycleMatrix<F>(mirror.space(), std::move(entries));
}

/// Matrix of a word applied first-to-last; the empty word is the identity.
template <FieldType F>
CycleMatrix<F> as_matrix(const QuadSpace<F>& space, const InversiveWord<F>& word) {
  auto m = CycleMatrix<F>::identity(space);
  for (const auto& r : word) m = reflection_matrix(r.mirror()) * m;
  return m;
}

template <FieldType F>
VPoint<F> apply_word(const InversiveWord<F>& word, VPoint<F> v) {
  for (const auto& r : word) v = reflect_point(r.mirror(), v);
  return v;
}

/// Exact Gram check: M^T G M = G in the canonical basis.
template <FieldType F>
bool preserves_pairing(const CycleMatrix<F>& m) {
  const auto& f = m.space().field();
  auto g = pairing_gram(m.space());
  std::size_t n = g.size();
  Matrix<typename F::element_type> mt(n, std::vector<typename F::element_type>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mt[i][j] = m.entries()[j][i];
  }
  return mat_mul(f, mt, mat_mul(f, g, m.entries())) == g;
}

namespace detail {

// Single reflection swapping two distinct points of V: its mirror is the
// difference of the embedded zero circles, which spans an Artinian plane with
// either of them.
template <FieldType F>
Cycle<F> swap_mirror(const QuadSpace<F>& space, const VPoint<F>& a, const VPoint<F>& b) {
  return cycle_sub(point_embed(space, a), point_embed(space, b));
}

}  // namespace detail

/// Word of at most two reflections sending u -> u2 and w -> w2. First swap
/// u with u2, then swap the tracked image of w with w2 using a mirror from
/// the orthogonal complement of the embedded u2, which keeps u2 fixed.
template <FieldType F>
InversiveWord<F> map_pair_to_pair(const QuadSpace<F>& space, const VPoint<F>& u,
                                  const VPoint<F>& w, const VPoint<F>& u2, const VPoint<F>& w2) {
  if (u == w || u2 == w2) fail(errc::degenerate_input, "pair points must be distinct");
  InversiveWord<F> word;
  VPoint<F> cur_w = w;
  if (!(u == u2)) {
    Reflection<F> r(detail::swap_mirror(space, u, u2));
    cur_w = reflect_point(r.mirror(), cur_w);
    word.push_back(std::move(r));
  }
  if (!(cur_w == w2)) {
    auto qa = point_embed(space, cur_w);
    auto qb = point_embed(space, w2);
    auto qu = point_embed(space, u2);
    auto mu = pairing(qa, qu) / pairing(qb, qu);
    Reflection<F> r(cycle_sub(qa, cycle_scale(mu, qb)));
    word.push_back(std::move(r));
  }
  if (!(apply_word(word, u) == u2) || !(apply_word(word, w) == w2)) {
    throw std::logic_error("pair transport produced wrong images");
  }
  return word;
}

/// The n+3 points {0, u_1..u_n, inf, 2u_1 + u_2 + ... + u_n}; their embedded
/// cycles form a projective frame of the cycle space.
template <FieldType F>
std::vector<VPoint<F>> isotropic_frame(const QuadSpace<F>& space) {
  const auto& f = space.field();
  std::vector<VPoint<F>> pts;
  pts.push_back(VPoint<F>::finite(space.zero_vector()));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    pts.push_back(VPoint<F>::finite(space.basis_vector(i)));
  }
  pts.push_back(VPoint<F>::at_infinity());
  auto z = space.basis_vector(0);
  z[0] = f.from_int(2);
  for (std::size_t i = 1; i < space.dim(); ++i) z[i] = f.one();
  pts.push_back(VPoint<F>::finite(std::move(z)));
  return pts;
}

}  // namespace inversive
