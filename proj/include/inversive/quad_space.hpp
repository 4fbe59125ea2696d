#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inversive/fields.hpp"

namespace inversive {

enum class AnisoStatus { proven, assumed_by_user, refuted };

struct AnisoKind {
  enum Value { proven, refuted, unknown } value;
};

template <FieldType F>
struct AnisoVerdict {
  typename AnisoKind::Value kind;
  std::optional<std::vector<typename F::element_type>> witness;
};

template <FieldType F>
std::vector<typename F::element_type> vec_add(const std::vector<typename F::element_type>& a,
                                              const std::vector<typename F::element_type>& b) {
  std::vector<typename F::element_type> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <FieldType F>
std::vector<typename F::element_type> vec_sub(const std::vector<typename F::element_type>& a,
                                              const std::vector<typename F::element_type>& b) {
  std::vector<typename F::element_type> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <FieldType F>
std::vector<typename F::element_type> vec_scale(const typename F::element_type& k,
                                                const std::vector<typename F::element_type>& a) {
  std::vector<typename F::element_type> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

/// Quadratic space in diagonal form: h(x) = sum d_i x_i^2 with every d_i
/// nonzero. Anisotropy is decided at construction where a criterion exists
/// (dimension 1 always; dimension 2 by the discriminant test; definite
/// rational diagonals); otherwise the space is carried as assumed-by-user.
template <FieldType F>
class QuadSpace {
 public:
  using element_type = typename F::element_type;
  using vector_type = std::vector<element_type>;

  QuadSpace(F field, vector_type diag) : field_(std::move(field)), diag_(std::move(diag)) {
    if (diag_.empty()) fail(errc::degenerate_input, "space must have dimension >= 1");
    for (const auto& d : diag_) {
      if (d == field_.zero()) fail(errc::degenerate_input, "zero diagonal coefficient");
    }
    if (F::finite && diag_.size() > 2) {
      fail(errc::no_anisotropic_form,
           "no anisotropic form of dimension " + std::to_string(diag_.size()) + " over a finite field");
    }
    classify_on_construction();
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return diag_.size(); }
  const vector_type& diag() const { return diag_; }
  AnisoStatus status() const { return status_; }
  const std::optional<vector_type>& isotropy_witness() const { return witness_; }

  friend bool operator==(const QuadSpace& a, const QuadSpace& b) {
    return a.field_ == b.field_ && a.diag_ == b.diag_;
  }

  element_type dot(const vector_type& x, const vector_type& y) const {
    check_dim(x);
    check_dim(y);
    element_type acc = field_.zero();
    for (std::size_t i = 0; i < diag_.size(); ++i) acc = acc + diag_[i] * x[i] * y[i];
    return acc;
  }

  element_type norm(const vector_type& x) const { return dot(x, x); }

  vector_type zero_vector() const { return vector_type(diag_.size(), field_.zero()); }

  vector_type basis_vector(std::size_t i) const {
    vector_type v = zero_vector();
    v[i] = field_.one();
    return v;
  }

  bool is_zero_vec(const vector_type& x) const {
    for (const auto& c : x) {
      if (!(c == field_.zero())) return false;
    }
    return true;
  }

  /// Deepens the construction-time classification with a bounded search for an
  /// isotropic vector (coordinates solved exactly one quadratic at a time).
  AnisoVerdict<F> verify_anisotropic(std::int64_t budget = 8) const {
    if (status_ == AnisoStatus::proven) return {AnisoKind::proven, std::nullopt};
    if (status_ == AnisoStatus::refuted) return {AnisoKind::refuted, witness_};
    auto found = search_isotropic(budget);
    if (found) return {AnisoKind::refuted, found};
    return {AnisoKind::unknown, std::nullopt};
  }

 private:
  void check_dim(const vector_type& x) const {
    if (x.size() != diag_.size()) {
      fail(errc::dimension_mismatch, "vector of length " + std::to_string(x.size()) +
                                         " in a space of dimension " + std::to_string(diag_.size()));
    }
  }

  void classify_on_construction() {
    status_ = AnisoStatus::assumed_by_user;
    if (diag_.size() == 1) {
      status_ = AnisoStatus::proven;
      return;
    }
    if (diag_.size() == 2) {
      // Binary form is isotropic exactly when -d1*d2 is a square.
      auto disc = -(diag_[0] * diag_[1]);
      if (!field_.is_square(disc)) {
        status_ = AnisoStatus::proven;
      } else {
        status_ = AnisoStatus::refuted;
        witness_ = binary_witness(disc);
      }
      return;
    }
    if constexpr (F::ordered) {
      int s = field_.sign(diag_[0]);
      bool definite = true;
      for (const auto& d : diag_) definite = definite && field_.sign(d) == s;
      if (definite) status_ = AnisoStatus::proven;
    }
  }

  vector_type binary_witness(const element_type& disc) const {
    if constexpr (F::finite) {
      // Small moduli: lexicographic scan, matching exhaustive-search oracles.
      if (field_.order() <= 1024) {
        for (std::uint64_t i = 0; i < field_.order(); ++i) {
          for (std::uint64_t j = 0; j < field_.order(); ++j) {
            if (i == 0 && j == 0) continue;
            vector_type v{field_.element_at(i), field_.element_at(j)};
            if (norm(v) == field_.zero()) return v;
          }
        }
      }
    }
    auto t = field_.sqrt(disc);
    // d1*t^2 + d2*d1^2 = d1*(t^2 + d1*d2) = 0.
    return {*t, diag_[0]};
  }

  std::optional<vector_type> search_isotropic(std::int64_t budget) const {
    std::size_t n = diag_.size();
    vector_type v = zero_vector();
    std::int64_t span = 2 * budget + 1;
    std::int64_t total = 1;
    for (std::size_t i = 0; i + 1 < n && total <= 2'000'000; ++i) total *= span;
    for (std::int64_t it = 0; it < total; ++it) {
      std::int64_t code = it;
      bool all_zero = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        std::int64_t c = code % span - budget;
        code /= span;
        v[i] = field_.from_int(c);
        all_zero = all_zero && c == 0;
      }
      // Solve d_n x^2 = -(partial norm) for the last coordinate.
      element_type partial = field_.zero();
      for (std::size_t i = 0; i + 1 < n; ++i) partial = partial + diag_[i] * v[i] * v[i];
      auto root = field_.sqrt(-partial / diag_[n - 1]);
      if (root) {
        if (all_zero && *root == field_.zero()) continue;
        v[n - 1] = *root;
        return v;
      }
    }
    return std::nullopt;
  }

  F field_;
  vector_type diag_;
  AnisoStatus status_;
  std::optional<vector_type> witness_;
};

}  // namespace inversive
