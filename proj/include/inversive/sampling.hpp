#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "inversive/cycles.hpp"

namespace inversive {

template <FieldType F>
std::vector<typename F::element_type> sample_vector(const QuadSpace<F>& space,
                                                    std::mt19937_64& rng) {
  std::vector<typename F::element_type> v;
  v.reserve(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) v.push_back(space.field().sample(rng));
  return v;
}

/// Point of V; roughly one draw in eight is the point at infinity.
template <FieldType F>
VPoint<F> sample_vpoint(const QuadSpace<F>& space, std::mt19937_64& rng) {
  if (rng() % 8 == 0) return VPoint<F>::at_infinity();
  return VPoint<F>::finite(sample_vector(space, rng));
}

template <FieldType F>
VPoint<F> sample_finite_vpoint(const QuadSpace<F>& space, std::mt19937_64& rng) {
  return VPoint<F>::finite(sample_vector(space, rng));
}

template <FieldType F>
Cycle<F> sample_cycle(const QuadSpace<F>& space, std::mt19937_64& rng) {
  const auto& f = space.field();
  for (;;) {
    auto a = f.sample(rng);
    auto b = sample_vector(space, rng);
    auto c = f.sample(rng);
    if (a == f.zero() && c == f.zero() && space.is_zero_vec(b)) continue;
    return Cycle<F>(space, a, std::move(b), c);
  }
}

template <FieldType F>
Cycle<F> sample_circle(const QuadSpace<F>& space, std::mt19937_64& rng) {
  const auto& f = space.field();
  for (;;) {
    auto a = f.sample(rng);
    if (a == f.zero()) continue;
    return Cycle<F>(space, a, sample_vector(space, rng), f.sample(rng));
  }
}

/// Circle of nonzero size (equivalently a non-isotropic quadratic cycle).
template <FieldType F>
Cycle<F> sample_nonzero_circle(const QuadSpace<F>& space, std::mt19937_64& rng) {
  for (;;) {
    auto p = sample_circle(space, rng);
    if (!(pairing(p, p) == space.field().zero())) return p;
  }
}

template <FieldType F>
Cycle<F> sample_line(const QuadSpace<F>& space, std::mt19937_64& rng) {
  const auto& f = space.field();
  for (;;) {
    auto b = sample_vector(space, rng);
    if (space.is_zero_vec(b)) continue;
    return Cycle<F>(space, f.zero(), std::move(b), f.sample(rng));
  }
}

template <FieldType F>
Cycle<F> sample_non_isotropic(const QuadSpace<F>& space, std::mt19937_64& rng) {
  for (;;) {
    auto p = sample_cycle(space, rng);
    if (!(pairing(p, p) == space.field().zero())) return p;
  }
}

}  // namespace inversive
