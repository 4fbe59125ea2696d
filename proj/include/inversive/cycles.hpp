#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inversive/linalg.hpp"
#include "inversive/quad_space.hpp"

namespace inversive {

/// Point of the extended space E u {infinity}.
template <FieldType F>
struct VPoint {
  bool infinite = false;
  std::vector<typename F::element_type> coords;

  static VPoint at_infinity() { return VPoint{true, {}}; }
  static VPoint finite(std::vector<typename F::element_type> c) {
    return VPoint{false, std::move(c)};
  }

  friend bool operator==(const VPoint& a, const VPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.coords == b.coords);
  }
};

enum class CycleKind { constant, line, circle };

struct CycleClass {
  CycleKind kind;
  bool zero_size = false;  // meaningful for circles only
};

/// The function p(X) = a X.X + b.X + c on a quadratic space. The zero
/// function is not a cycle and is rejected at construction.
template <FieldType F>
class Cycle {
 public:
  using element_type = typename F::element_type;
  using vector_type = std::vector<element_type>;

  Cycle(QuadSpace<F> space, element_type a, vector_type b, element_type c)
      : space_(std::move(space)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (b_.size() != space_.dim()) {
      fail(errc::dimension_mismatch, "linear coefficient of length " + std::to_string(b_.size()));
    }
    const auto zero = space_.field().zero();
    if (a_ == zero && c_ == zero && space_.is_zero_vec(b_)) {
      fail(errc::zero_function, "the zero function is not a cycle");
    }
  }

  static Cycle from_coords(const QuadSpace<F>& space, const vector_type& coords) {
    vector_type b(coords.begin() + 1, coords.end() - 1);
    return Cycle(space, coords.front(), std::move(b), coords.back());
  }

  const QuadSpace<F>& space() const { return space_; }
  const F& field() const { return space_.field(); }
  const element_type& quad_coeff() const { return a_; }
  const vector_type& linear_coeff() const { return b_; }
  const element_type& const_coeff() const { return c_; }

  /// Coordinates (a, b_1..b_n, c) in the canonical basis of the cycle space.
  vector_type coords() const {
    vector_type out;
    out.reserve(space_.dim() + 2);
    out.push_back(a_);
    out.insert(out.end(), b_.begin(), b_.end());
    out.push_back(c_);
    return out;
  }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.space_ == b.space_ && a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_;
  }

 private:
  QuadSpace<F> space_;
  element_type a_;
  vector_type b_;
  element_type c_;
};

namespace detail {

template <FieldType F>
void check_same_space(const Cycle<F>& p, const Cycle<F>& q) {
  if (!(p.space() == q.space())) fail(errc::space_mismatch, "cycles over different spaces");
}

}  // namespace detail

template <FieldType F>
Cycle<F> cycle_scale(const typename F::element_type& k, const Cycle<F>& p) {
  return Cycle<F>(p.space(), k * p.quad_coeff(), vec_scale<F>(k, p.linear_coeff()),
                  k * p.const_coeff());
}

template <FieldType F>
Cycle<F> cycle_add(const Cycle<F>& p, const Cycle<F>& q) {
  detail::check_same_space(p, q);
  return Cycle<F>(p.space(), p.quad_coeff() + q.quad_coeff(),
                  vec_add<F>(p.linear_coeff(), q.linear_coeff()), p.const_coeff() + q.const_coeff());
}

template <FieldType F>
Cycle<F> cycle_sub(const Cycle<F>& p, const Cycle<F>& q) {
  detail::check_same_space(p, q);
  return Cycle<F>(p.space(), p.quad_coeff() - q.quad_coeff(),
                  vec_sub<F>(p.linear_coeff(), q.linear_coeff()), p.const_coeff() - q.const_coeff());
}

/// alpha p + beta q, formed on coordinates so zero coefficients are fine; the
/// combination itself must still be a nonzero function.
template <FieldType F>
Cycle<F> cycle_combine(const typename F::element_type& alpha, const Cycle<F>& p,
                       const typename F::element_type& beta, const Cycle<F>& q) {
  detail::check_same_space(p, q);
  auto pc = p.coords();
  auto qc = q.coords();
  for (std::size_t i = 0; i < pc.size(); ++i) pc[i] = alpha * pc[i] + beta * qc[i];
  return Cycle<F>::from_coords(p.space(), pc);
}

/// The cycle pairing <p, q> = b.b* - 2 a c* - 2 a* c.
template <FieldType F>
typename F::element_type pairing(const Cycle<F>& p, const Cycle<F>& q) {
  detail::check_same_space(p, q);
  const auto two = p.field().from_int(2);
  return p.space().dot(p.linear_coeff(), q.linear_coeff()) -
         two * p.quad_coeff() * q.const_coeff() - two * q.quad_coeff() * p.const_coeff();
}

template <FieldType F>
CycleClass classify(const Cycle<F>& p) {
  const auto zero = p.field().zero();
  if (!(p.quad_coeff() == zero)) {
    return CycleClass{CycleKind::circle, pairing(p, p) == zero};
  }
  if (!p.space().is_zero_vec(p.linear_coeff())) return CycleClass{CycleKind::line, false};
  return CycleClass{CycleKind::constant, false};
}

template <FieldType F>
struct CenterSize {
  std::vector<typename F::element_type> center;
  typename F::element_type size;
};

template <FieldType F>
CenterSize<F> center_and_size(const Cycle<F>& p) {
  const auto& f = p.field();
  if (p.quad_coeff() == f.zero()) fail(errc::not_a_circle, "center/size need a quadratic cycle");
  const auto two_a = f.from_int(2) * p.quad_coeff();
  auto center = vec_scale<F>(-(f.one() / two_a), p.linear_coeff());
  auto size = pairing(p, p) / (two_a * two_a);
  return CenterSize<F>{std::move(center), std::move(size)};
}

/// Embeds a point of E u {inf} as an isotropic cycle: the unit constant for
/// infinity, the monic zero circle (X - w).(X - w) for a finite point w.
template <FieldType F>
Cycle<F> point_embed(const QuadSpace<F>& space, const VPoint<F>& v) {
  const auto& f = space.field();
  if (v.infinite) {
    return Cycle<F>(space, f.zero(), space.zero_vector(), f.one());
  }
  auto b = vec_scale<F>(f.from_int(-2), v.coords);
  return Cycle<F>(space, f.one(), std::move(b), space.norm(v.coords));
}

template <FieldType F>
VPoint<F> point_extract(const Cycle<F>& p) {
  const auto& f = p.field();
  if (!(pairing(p, p) == f.zero())) fail(errc::not_isotropic, "cycle has nonzero self-pairing");
  if (!(p.quad_coeff() == f.zero())) {
    return VPoint<F>::finite(center_and_size(p).center);
  }
  if (!p.space().is_zero_vec(p.linear_coeff())) {
    // An isotropic line can only exist when the ambient form is isotropic.
    fail(errc::isotropic_vector_encountered, "isotropic line has no point representation");
  }
  return VPoint<F>::at_infinity();
}

template <FieldType F>
typename F::element_type evaluate(const Cycle<F>& p,
                                  const std::vector<typename F::element_type>& x) {
  return p.quad_coeff() * p.space().norm(x) + p.space().dot(p.linear_coeff(), x) +
         p.const_coeff();
}

/// Extended zero-set membership: infinity counts as a zero of every line and
/// constant, never of a circle.
template <FieldType F>
bool on_zero_set(const Cycle<F>& p, const VPoint<F>& v) {
  if (v.infinite) return classify(p).kind != CycleKind::circle;
  return evaluate(p, v.coords) == p.field().zero();
}

template <FieldType F>
bool proj_equiv(const Cycle<F>& p, const Cycle<F>& q) {
  detail::check_same_space(p, q);
  auto pc = p.coords();
  auto qc = q.coords();
  const auto zero = p.field().zero();
  std::size_t lead = pc.size();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (!(pc[i] == zero)) {
      lead = i;
      break;
    }
  }
  auto u = qc[lead] / pc[lead];
  if (u == zero) return false;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (!(qc[i] == u * pc[i])) return false;
  }
  return true;
}

struct ZeroSetVerdict {
  enum Value { yes, no, unknown } value;
};

template <FieldType F>
struct ZeroSetResult {
  typename ZeroSetVerdict::Value verdict;
  std::optional<VPoint<F>> witness;
};

/// Decides whether a circle has any zero in E. Exact in dimension one and
/// over finite fields; over Q a definite diagonal settles the negative case
/// and otherwise a bounded-height search may be inconclusive.
template <FieldType F>
ZeroSetResult<F> zero_set_nonempty(const Cycle<F>& p, std::int64_t budget = 8) {
  const auto& f = p.field();
  if (classify(p).kind != CycleKind::circle) fail(errc::not_a_circle, "zero-set verdict needs a circle");
  auto cs = center_and_size(p);
  if (cs.size == f.zero()) {
    return {ZeroSetVerdict::yes, VPoint<F>::finite(cs.center)};
  }
  const auto& space = p.space();
  std::size_t n = space.dim();
  if (n == 1) {
    auto root = f.sqrt(cs.size / space.diag()[0]);
    if (!root) return {ZeroSetVerdict::no, std::nullopt};
    return {ZeroSetVerdict::yes, VPoint<F>::finite({cs.center[0] + *root})};
  }
  if constexpr (F::finite) {
    std::uint64_t q = f.order();
    std::vector<typename F::element_type> x(n, f.zero());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    for (std::uint64_t it = 0; it < total; ++it) {
      std::uint64_t code = it;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = f.element_at(code % q);
        code /= q;
      }
      if (evaluate(p, x) == f.zero()) return {ZeroSetVerdict::yes, VPoint<F>::finite(x)};
    }
    return {ZeroSetVerdict::no, std::nullopt};
  } else {
    if constexpr (F::ordered) {
      int s = f.sign(space.diag()[0]);
      bool definite = true;
      for (const auto& d : space.diag()) definite = definite && f.sign(d) == s;
      if (definite && f.sign(cs.size) == -s) return {ZeroSetVerdict::no, std::nullopt};
    }
    // Bounded search: integer leading coordinates, last coordinate solved
    // exactly as a quadratic.
    std::int64_t span = 2 * budget + 1;
    std::int64_t total = 1;
    for (std::size_t i = 0; i + 1 < n && total <= 2'000'000; ++i) total *= span;
    std::vector<typename F::element_type> x(n, f.zero());
    const auto quad_a = p.quad_coeff() * space.diag()[n - 1];
    for (std::int64_t it = 0; it < total; ++it) {
      std::int64_t code = it;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        x[i] = f.from_int(code % span - budget);
        code /= span;
      }
      // p(x) as a quadratic in the last coordinate: quad_a t^2 + lin_b t + rest.
      auto rest = p.const_coeff();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        rest = rest + p.quad_coeff() * space.diag()[i] * x[i] * x[i] +
               space.diag()[i] * p.linear_coeff()[i] * x[i];
      }
      const auto lin_b = space.diag()[n - 1] * p.linear_coeff()[n - 1];
      auto disc = lin_b * lin_b - f.from_int(4) * quad_a * rest;
      auto root = f.sqrt(disc);
      if (root) {
        x[n - 1] = (-lin_b + *root) / (f.from_int(2) * quad_a);
        return {ZeroSetVerdict::yes, VPoint<F>::finite(x)};
      }
    }
    return {ZeroSetVerdict::unknown, std::nullopt};
  }
}

/// Canonical basis of the cycle space: X.X, the coordinate lines, 1.
template <FieldType F>
std::vector<Cycle<F>> canonical_basis(const QuadSpace<F>& space) {
  const auto& f = space.field();
  std::vector<Cycle<F>> basis;
  basis.emplace_back(space, f.one(), space.zero_vector(), f.zero());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    basis.emplace_back(space, f.zero(), space.basis_vector(i), f.zero());
  }
  basis.emplace_back(space, f.zero(), space.zero_vector(), f.one());
  return basis;
}

/// Gram matrix of the cycle pairing in the canonical basis.
template <FieldType F>
Matrix<typename F::element_type> pairing_gram(const QuadSpace<F>& space) {
  auto basis = canonical_basis(space);
  std::size_t m = basis.size();
  Matrix<typename F::element_type> g(m, std::vector<typename F::element_type>(m, space.field().zero()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = pairing(basis[i], basis[j]);
  }
  return g;
}

}  // namespace inversive
