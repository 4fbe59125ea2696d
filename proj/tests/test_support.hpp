#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "inversive/errors.hpp"
#include "inversive/fields.hpp"
#include "inversive/quad_space.hpp"

namespace testsupport {

using namespace inversive;

template <class Fn>
errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a domain error");
}

inline Rat rq(long long num, long long den = 1) { return make_rat(num, den); }

template <class F>
F make_field();

template <>
inline RationalField make_field<RationalField>() {
  return RationalField{};
}
template <>
inline PrimeField make_field<PrimeField>() {
  return PrimeField(7);
}
template <>
inline QuadExtField make_field<QuadExtField>() {
  return QuadExtField(5);
}

template <class F>
QuadSpace<F> unit_space(const F& f, std::size_t dim) {
  return QuadSpace<F>(f, std::vector<typename F::element_type>(dim, f.one()));
}

/// Spaces with proven anisotropy for the given field, dimension 1 upward.
template <class F>
std::vector<QuadSpace<F>> proven_spaces(const F& f) {
  std::vector<QuadSpace<F>> out;
  out.push_back(unit_space(f, 1));
  auto plane = unit_space(f, 2);
  if (plane.status() == AnisoStatus::proven) out.push_back(plane);
  if constexpr (!F::finite) {
    auto cube = unit_space(f, 3);
    if (cube.status() == AnisoStatus::proven) out.push_back(cube);
  }
  return out;
}

}  // namespace testsupport
