#pragma once

#include <utility>
#include <vector>

#include "inversive/cycles.hpp"

namespace inversive {

/// Element (x, y, z) of the space E + k^2 carrying the Lorentz product
/// y.y* + x x* - z z*.
template <FieldType F>
struct LorentzVec {
  typename F::element_type x;
  std::vector<typename F::element_type> y;
  typename F::element_type z;

  friend bool operator==(const LorentzVec& a, const LorentzVec& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

template <FieldType F>
typename F::element_type lorentz_product(const QuadSpace<F>& space, const LorentzVec<F>& t,
                                         const LorentzVec<F>& u) {
  if (t.y.size() != space.dim() || u.y.size() != space.dim()) {
    fail(errc::space_mismatch, "Lorentz vectors of mismatched dimension");
  }
  return space.dot(t.y, u.y) + t.x * u.x - t.z * u.z;
}

template <FieldType F>
bool lorentz_is_zero(const QuadSpace<F>& space, const LorentzVec<F>& t) {
  return t.x == space.field().zero() && t.z == space.field().zero() && space.is_zero_vec(t.y);
}

/// The stereographic isometry S: (x, y, z) -> ((z-x)/2) X.X - y.X + (z+x)/2.
template <FieldType F>
Cycle<F> stereo_to_cycle(const QuadSpace<F>& space, const LorentzVec<F>& t) {
  if (lorentz_is_zero(space, t)) fail(errc::zero_vector, "zero vector has no cycle image");
  const auto& f = space.field();
  const auto two = f.from_int(2);
  return Cycle<F>(space, (t.z - t.x) / two, vec_scale<F>(-f.one(), t.y), (t.z + t.x) / two);
}

/// Exact inverse of the stereographic isometry.
template <FieldType F>
LorentzVec<F> stereo_from_cycle(const Cycle<F>& p) {
  return LorentzVec<F>{p.const_coeff() - p.quad_coeff(),
                       vec_scale<F>(-p.field().one(), p.linear_coeff()),
                       p.quad_coeff() + p.const_coeff()};
}

/// Projection of an isotropic Lorentz vector to E u {inf}: the (1, 0, 1)
/// direction goes to infinity, every other direction to y/(z - x).
template <FieldType F>
VPoint<F> lorentz_to_point(const QuadSpace<F>& space, const LorentzVec<F>& t) {
  const auto& f = space.field();
  if (lorentz_is_zero(space, t)) fail(errc::zero_vector, "zero vector is not a direction");
  if (!(lorentz_product(space, t, t) == f.zero())) {
    fail(errc::not_isotropic, "Lorentz vector has nonzero self-product");
  }
  if (t.x == t.z) return VPoint<F>::at_infinity();
  return VPoint<F>::finite(vec_scale<F>(f.one() / (t.z - t.x), t.y));
}

}  // namespace inversive
