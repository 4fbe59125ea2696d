#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inversive/transforms.hpp"

namespace inversive {

/// Two-dimensional subspace of the cycle space, given by an independent basis.
template <FieldType F>
class Pencil {
 public:
  Pencil(Cycle<F> p, Cycle<F> q) : p_(std::move(p)), q_(std::move(q)) {
    detail::check_same_space(p_, q_);
    if (proj_equiv(p_, q_)) fail(errc::degenerate_input, "pencil basis must be independent");
  }

  const Cycle<F>& first() const { return p_; }
  const Cycle<F>& second() const { return q_; }

 private:
  Cycle<F> p_;
  Cycle<F> q_;
};

enum class PencilClass { singular, regular_anisotropic, regular_artinian };

template <FieldType F>
Matrix<typename F::element_type> gram2(const Pencil<F>& pencil) {
  auto pp = pairing(pencil.first(), pencil.first());
  auto pq = pairing(pencil.first(), pencil.second());
  auto qq = pairing(pencil.second(), pencil.second());
  return Matrix<typename F::element_type>{{pp, pq}, {pq, qq}};
}

/// Trichotomy by the induced 2x2 Gram: singular when det = 0, otherwise
/// Artinian exactly when -det is a square (binary regular form is isotropic
/// iff its discriminant is minus one modulo squares).
template <FieldType F>
PencilClass classify_pencil(const Pencil<F>& pencil) {
  const auto& f = pencil.first().field();
  auto d = det(f, gram2(pencil));
  if (d == f.zero()) return PencilClass::singular;
  return f.is_square(-d) ? PencilClass::regular_artinian : PencilClass::regular_anisotropic;
}

/// Basis of the subspace of cycles orthogonal to every given cycle.
template <FieldType F>
std::vector<Cycle<F>> orthocomplement(const QuadSpace<F>& space,
                                      const std::vector<Cycle<F>>& cycles) {
  const auto& f = space.field();
  auto g = pairing_gram(space);
  std::size_t m = space.dim() + 2;
  Matrix<typename F::element_type> rows;
  for (const auto& s : cycles) {
    if (!(s.space() == space)) fail(errc::space_mismatch, "cycle over a different space");
    rows.push_back(mat_vec(f, g, s.coords()));
  }
  std::vector<Cycle<F>> basis;
  for (auto& v : kernel_basis(f, std::move(rows), m)) {
    basis.push_back(Cycle<F>::from_coords(space, v));
  }
  return basis;
}

template <FieldType F>
struct CommonZeros {
  std::vector<VPoint<F>> points;
  bool complete;  // false when a bounded search may have missed points
};

/// Points of V lying on every cycle of the pencil. Singular pencils yield the
/// radical's point; Artinian pencils the two points of their isotropic
/// members (roots in ascending construction order, then the second basis
/// cycle when it is itself isotropic); anisotropic pencils delegate to the
/// orthocomplement, exactly in dimension one and by search above it.
template <FieldType F>
CommonZeros<F> common_zeros(const Pencil<F>& pencil, std::int64_t budget = 4) {
  const auto& f = pencil.first().field();
  const auto& space = pencil.first().space();
  auto cls = classify_pencil(pencil);

  if (cls == PencilClass::singular) {
    auto kernel = kernel_basis(f, gram2(pencil), 2);
    if (kernel.size() != 1) {
      fail(errc::isotropic_vector_encountered, "totally isotropic pencil in a degenerate space");
    }
    auto radical = cycle_combine(kernel[0][0], pencil.first(), kernel[0][1], pencil.second());
    return {{point_extract(radical)}, true};
  }

  if (cls == PencilClass::regular_artinian) {
    std::vector<VPoint<F>> pts;
    auto pp = pairing(pencil.first(), pencil.first());
    auto pq = pairing(pencil.first(), pencil.second());
    auto qq = pairing(pencil.second(), pencil.second());
    const auto two = f.from_int(2);
    auto member = [&](const typename F::element_type& t) {
      return cycle_combine(f.one(), pencil.first(), t, pencil.second());
    };
    if (qq == f.zero()) {
      // <p + t q, p + t q> is linear in t; q itself is the second member.
      pts.push_back(point_extract(member(-pp / (two * pq))));
      pts.push_back(point_extract(pencil.second()));
    } else {
      auto disc = f.from_int(4) * (pq * pq - pp * qq);
      auto r = f.sqrt(disc);
      if (!r) fail(errc::no_rational_members, "isotropic members live in a proper extension");
      pts.push_back(point_extract(member((-two * pq - *r) / (two * qq))));
      pts.push_back(point_extract(member((-two * pq + *r) / (two * qq))));
    }
    return {std::move(pts), true};
  }

  auto complement = orthocomplement(space, {pencil.first(), pencil.second()});
  if (complement.size() == 1) {
    if (pairing(complement[0], complement[0]) == f.zero()) {
      return {{point_extract(complement[0])}, true};
    }
    return {{}, true};
  }
  // Search the complement for isotropic cycles; each gives a common zero.
  std::vector<VPoint<F>> pts;
  auto consider = [&](const Cycle<F>& candidate) {
    if (!(pairing(candidate, candidate) == f.zero())) return;
    auto pt = point_extract(candidate);
    for (const auto& existing : pts) {
      if (existing == pt) return;
    }
    pts.push_back(std::move(pt));
  };
  bool complete = false;
  if constexpr (F::finite) {
    std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < complement.size(); ++i) total *= q;
    for (std::uint64_t it = 1; it < total; ++it) {
      std::uint64_t code = it;
      auto combo_coords = std::vector<typename F::element_type>(space.dim() + 2, f.zero());
      for (std::size_t i = 0; i < complement.size(); ++i) {
        auto coeff = f.element_at(code % q);
        code /= q;
        if (coeff == f.zero()) continue;
        auto cc = complement[i].coords();
        for (std::size_t j = 0; j < combo_coords.size(); ++j) {
          combo_coords[j] = combo_coords[j] + coeff * cc[j];
        }
      }
      consider(Cycle<F>::from_coords(space, combo_coords));
    }
    complete = true;
  } else {
    std::int64_t span = 2 * budget + 1;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < complement.size() && total <= 2'000'000; ++i) total *= span;
    for (std::int64_t it = 1; it < total; ++it) {
      std::int64_t code = it;
      bool any = false;
      auto combo_coords = std::vector<typename F::element_type>(space.dim() + 2, f.zero());
      for (std::size_t i = 0; i < complement.size(); ++i) {
        std::int64_t c = code % span - budget;
        code /= span;
        if (c == 0) continue;
        any = true;
        auto cc = complement[i].coords();
        for (std::size_t j = 0; j < combo_coords.size(); ++j) {
          combo_coords[j] = combo_coords[j] + f.from_int(c) * cc[j];
        }
      }
      if (!any) continue;
      consider(Cycle<F>::from_coords(space, combo_coords));
    }
  }
  return {std::move(pts), complete};
}

template <FieldType F>
struct ConjugateResult {
  VPoint<F> image;
  // Coefficients expressing the mirror in the span of the embedded endpoints;
  // absent when the point is fixed.
  std::optional<std::pair<typename F::element_type, typename F::element_type>> certificate;
};

/// Conjugate point of m with respect to a non-isotropic cycle, together with
/// the span certificate p = alpha q_m + beta q_m'.
template <FieldType F>
ConjugateResult<F> conjugate(const Cycle<F>& mirror, const VPoint<F>& m) {
  auto image = reflect_point(mirror, m);
  if (image == m) return {std::move(image), std::nullopt};
  const auto& f = mirror.field();
  auto qm = point_embed(mirror.space(), m).coords();
  auto qi = point_embed(mirror.space(), image).coords();
  Matrix<typename F::element_type> a(qm.size(), std::vector<typename F::element_type>(2, f.zero()));
  for (std::size_t i = 0; i < qm.size(); ++i) {
    a[i][0] = qm[i];
    a[i][1] = qi[i];
  }
  auto sol = solve_linear(f, std::move(a), mirror.coords());
  if (!sol) throw std::logic_error("conjugate certificate system is inconsistent");
  return {std::move(image), std::make_pair((*sol)[0], (*sol)[1])};
}

}  // namespace inversive
