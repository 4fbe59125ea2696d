#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inversive/lorentz.hpp"
#include "inversive/ninepoint.hpp"
#include "inversive/pencils.hpp"
#include "inversive/projline.hpp"
#include "inversive/sampling.hpp"
#include "inversive/scene.hpp"

namespace inversive {

struct Verdict {
  std::string check;
  std::string field;
  std::uint64_t seed;
  bool pass;
  std::string witness;  // exact reproducing values; empty on pass
};

namespace detail {

// Failure witness or nullopt; checks stop at the first counterexample.
using CheckOutcome = std::optional<std::string>;

template <FieldType F>
class SuiteRunner {
 public:
  SuiteRunner(F field, std::uint64_t seed, int count, std::int64_t budget)
      : field_(std::move(field)), seed_(seed), count_(count), budget_(budget) {}

  const std::vector<Verdict>& verdicts() const { return verdicts_; }

  std::vector<QuadSpace<F>> spaces() const {
    std::vector<QuadSpace<F>> out;
    out.emplace_back(field_, std::vector<typename F::element_type>{field_.one()});
    QuadSpace<F> plane(field_, {field_.one(), field_.one()});
    if (plane.status() == AnisoStatus::proven) out.push_back(plane);
    if constexpr (!F::finite) {
      QuadSpace<F> cube(field_, {field_.one(), field_.one(), field_.one()});
      if (cube.status() == AnisoStatus::proven) out.push_back(cube);
    }
    return out;
  }

  std::mt19937_64 rng(std::uint64_t salt) const { return std::mt19937_64(seed_ * 0x9e3779b9 + salt); }

  template <class Fn>
  void record(const std::string& check, Fn&& fn) {
    CheckOutcome outcome;
    try {
      outcome = fn();
    } catch (const error& e) {
      outcome = std::string("unexpected error: ") + e.what();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    verdicts_.push_back(Verdict{check, field_.descriptor(), seed_, !outcome.has_value(),
                                outcome.value_or("")});
  }

  std::string pstr(const Cycle<F>& p) const { return "(" + cycle_str(p) + ")"; }
  std::string vstr(const VPoint<F>& v) const { return vpoint_str(field_, v); }

  // ---- pairing suite ----

  void suite_pairing() {
    for (const auto& space : spaces()) {
      std::string d = "/dim" + std::to_string(space.dim());
      record("pairing/symmetry-bilinearity" + d, [&] { return check_symmetry_bilinearity(space); });
      record("pairing/gram-nondegenerate" + d, [&] { return check_gram(space); });
      record("pairing/lines-product" + d, [&] { return check_lines_product(space); });
      record("pairing/circle-line-center" + d, [&] { return check_circle_line(space); });
      record("pairing/circles-identity" + d, [&] { return check_circles_identity(space); });
      record("pairing/isotropy-classification" + d, [&] { return check_isotropy_classification(space); });
      if constexpr (F::ordered) {
        record("pairing/negative-sizes" + d, [&] { return check_negative_sizes(space); });
      }
      record("pairing/point-roundtrip" + d, [&] { return check_point_roundtrip(space); });
    }
    if constexpr (F::finite) {
      QuadSpace<F> plane(field_, {field_.one(), field_.one()});
      if (plane.status() == AnisoStatus::proven) {
        record("pairing/zero-set-cardinality", [&] { return check_zero_set_cardinality(plane); });
      }
    }
  }

  CheckOutcome check_symmetry_bilinearity(const QuadSpace<F>& space) const {
    auto gen = rng(11);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_cycle(space, gen);
      auto q = sample_cycle(space, gen);
      auto r = sample_cycle(space, gen);
      auto alpha = field_.sample(gen);
      auto beta = field_.sample(gen);
      if (!(pairing(p, q) == pairing(q, p))) {
        return "symmetry broken: p=" + pstr(p) + " q=" + pstr(q);
      }
      auto lhs = alpha * pairing(p, r) + beta * pairing(q, r);
      auto combo_coords = p.coords();
      auto qc = q.coords();
      bool zero = true;
      for (std::size_t k = 0; k < combo_coords.size(); ++k) {
        combo_coords[k] = alpha * combo_coords[k] + beta * qc[k];
        zero = zero && combo_coords[k] == field_.zero();
      }
      if (zero) continue;
      auto combo = Cycle<F>::from_coords(space, combo_coords);
      if (!(pairing(combo, r) == lhs)) {
        return "bilinearity broken: p=" + pstr(p) + " q=" + pstr(q) + " r=" + pstr(r);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_gram(const QuadSpace<F>& space) const {
    auto g = pairing_gram(space);
    if (det(field_, g) == field_.zero()) return std::string("canonical Gram matrix is singular");
    return std::nullopt;
  }

  CheckOutcome check_lines_product(const QuadSpace<F>& space) const {
    auto gen = rng(12);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_line(space, gen);
      auto q = sample_line(space, gen);
      if (!(pairing(p, q) == space.dot(p.linear_coeff(), q.linear_coeff()))) {
        return "line pairing mismatch: p=" + pstr(p) + " q=" + pstr(q);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_circle_line(const QuadSpace<F>& space) const {
    auto gen = rng(13);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_circle(space, gen);
      auto l = sample_line(space, gen);
      bool orthogonal = pairing(p, l) == field_.zero();
      bool through_center = evaluate(l, center_and_size(p).center) == field_.zero();
      if (orthogonal != through_center) {
        return "circle-line criterion mismatch: p=" + pstr(p) + " l=" + pstr(l);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_circles_identity(const QuadSpace<F>& space) const {
    auto gen = rng(14);
    const auto two = field_.from_int(2);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_circle(space, gen);
      auto q = sample_circle(space, gen);
      auto cp = center_and_size(p);
      auto cq = center_and_size(q);
      auto w = space.norm(vec_sub<F>(cp.center, cq.center));
      auto rhs = two * p.quad_coeff() * q.quad_coeff() * (cp.size + cq.size - w);
      if (!(pairing(p, q) == rhs)) {
        return "2ad(s+t-w) identity fails: p=" + pstr(p) + " q=" + pstr(q);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_isotropy_classification(const QuadSpace<F>& space) const {
    auto gen = rng(15);
    for (int i = 0; i < count_; ++i) {
      // Mix generic samples with guaranteed isotropic ones.
      Cycle<F> p = (i % 3 == 0) ? sample_isotropic(space, gen) : sample_cycle(space, gen);
      bool isotropic = pairing(p, p) == field_.zero();
      auto cls = classify(p);
      bool point_like = cls.kind == CycleKind::constant ||
                        (cls.kind == CycleKind::circle && cls.zero_size);
      if (isotropic != point_like) {
        return "isotropy/classification mismatch: p=" + pstr(p);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_negative_sizes(const QuadSpace<F>& space) const {
    if constexpr (!F::ordered) {
      return std::nullopt;
    } else {
      int sgn = field_.sign(space.diag()[0]);
      for (const auto& dcoef : space.diag()) {
        if (field_.sign(dcoef) != sgn) return std::nullopt;  // needs a definite space
      }
      auto gen = rng(16);
      for (int i = 0; i < count_; ++i) {
        auto p = circle_with_negative_size(space, gen);
        auto q = circle_with_negative_size(space, gen);
        if (pairing(p, q) == field_.zero()) {
          return "negative-size circles became orthogonal: p=" + pstr(p) + " q=" + pstr(q);
        }
      }
      return std::nullopt;
    }
  }

  CheckOutcome check_point_roundtrip(const QuadSpace<F>& space) const {
    auto gen = rng(17);
    for (int i = 0; i < count_; ++i) {
      auto v = sample_vpoint(space, gen);
      if (!(point_extract(point_embed(space, v)) == v)) {
        return "extract(embed(v)) != v at v=" + vstr(v);
      }
      auto p = sample_isotropic(space, gen);
      if (!proj_equiv(point_embed(space, point_extract(p)), p)) {
        return "embed(extract(p)) not equivalent to p=" + pstr(p);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_zero_set_cardinality(const QuadSpace<F>& space) const {
    if constexpr (!F::finite) {
      return std::nullopt;
    } else {
      std::uint64_t p = field_.order();
      std::uint64_t expected = p + 1;
      std::optional<std::string> failure;
      for_each_projective_cycle(space, [&](const Cycle<F>& cyc) {
        if (failure) return;
        auto cls = classify(cyc);
        std::uint64_t zeros = 0;
        for_each_vpoint(space, [&](const VPoint<F>& v) {
          if (on_zero_set(cyc, v)) ++zeros;
        });
        if (cls.kind == CycleKind::line && zeros != expected) {
          failure = "line with " + std::to_string(zeros) + " extended zeros: " + pstr(cyc);
        }
        if (cls.kind == CycleKind::circle) {
          if (cls.zero_size && zeros != 1) {
            failure = "zero circle with " + std::to_string(zeros) + " zeros: " + pstr(cyc);
          }
          if (!cls.zero_size && zeros != 0 && zeros != expected) {
            failure = "circle with " + std::to_string(zeros) + " zeros: " + pstr(cyc);
          }
        }
      });
      return failure;
    }
  }

  // ---- reflect-equiv suite ----

  void suite_reflect() {
    for (const auto& space : spaces()) {
      std::string d = "/dim" + std::to_string(space.dim());
      record("reflect/line-action" + d, [&] { return check_line_action(space); });
      record("reflect/circle-action" + d, [&] { return check_circle_action(space); });
      record("reflect/prop52" + d, [&] { return check_prop52(space); });
      record("reflect/involution" + d, [&] { return check_involution(space); });
      record("reflect/word-orthogonal" + d, [&] { return check_word_orthogonal(space); });
      record("reflect/conformal-incidence" + d, [&] { return check_conformal(space); });
      record("reflect/faithfulness" + d, [&] { return check_faithfulness(space); });
      record("reflect/double-transitivity" + d, [&] { return check_double_transitivity(space); });
    }
    if constexpr (F::finite) {
      QuadSpace<F> plane(field_, {field_.one(), field_.one()});
      if (plane.status() == AnisoStatus::proven && feasible_exhaustive(plane)) {
        record("reflect/exhaustive-equivalence", [&] { return check_exhaustive_equivalence(plane); });
      }
    }
  }

  CheckOutcome check_line_action(const QuadSpace<F>& space) const {
    auto gen = rng(21);
    for (int i = 0; i < count_; ++i) {
      auto l = sample_line(space, gen);
      auto v = sample_vpoint(space, gen);
      if (!(reflect_point(l, v) == affine_reflect(l, v))) {
        return "line action differs: l=" + pstr(l) + " v=" + vstr(v);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_circle_action(const QuadSpace<F>& space) const {
    auto gen = rng(22);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_nonzero_circle(space, gen);
      auto v = sample_vpoint(space, gen);
      if (!(reflect_point(p, v) == invert_point(p, v))) {
        return "circle action differs: p=" + pstr(p) + " v=" + vstr(v);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_prop52(const QuadSpace<F>& space) const {
    auto gen = rng(23);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_nonzero_circle(space, gen);
      auto x = sample_circle(space, gen);
      auto center = center_and_size(p).center;
      if (proj_equiv(x, point_embed(space, VPoint<F>::finite(center)))) continue;
      bool becomes_line = classify(reflect(p, x)).kind == CycleKind::line;
      bool through_center = evaluate(x, center) == field_.zero();
      if (becomes_line != through_center) {
        return "reflected-circle-to-line criterion fails: p=" + pstr(p) + " x=" + pstr(x);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_involution(const QuadSpace<F>& space) const {
    auto gen = rng(24);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_non_isotropic(space, gen);
      auto x = sample_cycle(space, gen);
      if (!(reflect(p, reflect(p, x)) == x)) {
        return "double reflection is not the identity: p=" + pstr(p) + " x=" + pstr(x);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_word_orthogonal(const QuadSpace<F>& space) const {
    auto gen = rng(25);
    int reps = count_ / 4 + 1;
    for (int i = 0; i < reps; ++i) {
      InversiveWord<F> word;
      std::size_t len = gen() % 4;
      for (std::size_t k = 0; k < len; ++k) word.emplace_back(sample_non_isotropic(space, gen));
      if (!preserves_pairing(as_matrix(space, word))) {
        return "word of " + std::to_string(len) + " reflections lost the pairing";
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_conformal(const QuadSpace<F>& space) const {
    auto gen = rng(26);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_non_isotropic(space, gen);
      auto w = sample_vector(space, gen);
      auto q = cycle_through(space, gen, w);
      auto v = VPoint<F>::finite(w);
      if (!on_zero_set(q, v)) return std::string("constructed cycle misses its point");
      if (!on_zero_set(reflect(p, q), reflect_point(p, v))) {
        return "image of zero set not a zero set: p=" + pstr(p) + " q=" + pstr(q) +
               " v=" + vstr(v);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_faithfulness(const QuadSpace<F>& space) const {
    auto gen = rng(27);
    auto frame = isotropic_frame(space);
    int reps = count_ / 4 + 1;
    for (int i = 0; i < reps; ++i) {
      InversiveWord<F> word;
      std::size_t len = gen() % 3;
      for (std::size_t k = 0; k < len; ++k) word.emplace_back(sample_non_isotropic(space, gen));
      if (i % 2 == 0 && !word.empty()) word.push_back(word.back());  // forced identity words
      auto m = as_matrix(space, word);
      bool fixes_frame = true;
      for (const auto& pt : frame) fixes_frame = fixes_frame && m.apply(pt) == pt;
      if (!fixes_frame) continue;
      for (int k = 0; k < 50; ++k) {
        auto v = sample_vpoint(space, gen);
        if (!(m.apply(v) == v)) {
          return "frame-fixing matrix moved " + vstr(v);
        }
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_double_transitivity(const QuadSpace<F>& space) const {
    auto gen = rng(28);
    for (int i = 0; i < count_; ++i) {
      auto u = sample_vpoint(space, gen);
      auto w = sample_vpoint(space, gen);
      auto u2 = sample_vpoint(space, gen);
      auto w2 = sample_vpoint(space, gen);
      if (u == w || u2 == w2) continue;
      auto word = map_pair_to_pair(space, u, w, u2, w2);
      if (word.size() > 4) return std::string("word longer than four reflections");
      if (!(apply_word(word, u) == u2) || !(apply_word(word, w) == w2)) {
        return "transport failed: (" + vstr(u) + "," + vstr(w) + ") -> (" + vstr(u2) + "," +
               vstr(w2) + ")";
      }
    }
    return std::nullopt;
  }

  bool feasible_exhaustive(const QuadSpace<F>& space) const {
    if constexpr (!F::finite) {
      return false;
    } else {
      double p = static_cast<double>(field_.order());
      double classes = (std::pow(p, static_cast<double>(space.dim() + 2)) - 1) / (p - 1);
      double points = std::pow(p, static_cast<double>(space.dim())) + 1;
      return classes * points <= 100000.0;
    }
  }

  CheckOutcome check_exhaustive_equivalence(const QuadSpace<F>& space) const {
    if constexpr (!F::finite) {
      return std::nullopt;
    } else {
      std::optional<std::string> failure;
      for_each_projective_cycle(space, [&](const Cycle<F>& mirror) {
        if (failure) return;
        if (pairing(mirror, mirror) == field_.zero()) return;
        auto cls = classify(mirror);
        for_each_vpoint(space, [&](const VPoint<F>& v) {
          if (failure) return;
          auto via_reflection = reflect_point(mirror, v);
          auto direct = cls.kind == CycleKind::line ? affine_reflect(mirror, v)
                                                    : invert_point(mirror, v);
          if (!(via_reflection == direct)) {
            failure = "exhaustive mismatch at mirror=" + pstr(mirror) + " v=" + vstr(v);
          }
        });
      });
      return failure;
    }
  }

  // ---- pencils suite ----

  void suite_pencils() {
    for (const auto& space : spaces()) {
      std::string d = "/dim" + std::to_string(space.dim());
      record("pencils/classification-counts" + d, [&] { return check_pencil_counts(space); });
      if (space.dim() == 1) {
        record("pencils/duality-line" + d, [&] { return check_pencil_duality(space); });
      }
    }
  }

  Pencil<F> sample_pencil(const QuadSpace<F>& space, std::mt19937_64& gen, int flavor) const {
    if (flavor % 3 == 0) {
      // Span of two embedded points: always an Artinian plane.
      for (;;) {
        auto a = sample_vpoint(space, gen);
        auto b = sample_vpoint(space, gen);
        if (a == b) continue;
        return Pencil<F>(point_embed(space, a), point_embed(space, b));
      }
    }
    if (flavor % 3 == 1) {
      // Two cycles through a common point: a singular or artinian pencil.
      auto w = sample_vector(space, gen);
      for (;;) {
        auto p = cycle_through(space, gen, w);
        auto q = cycle_through(space, gen, w);
        if (proj_equiv(p, q)) continue;
        return Pencil<F>(p, q);
      }
    }
    for (;;) {
      auto p = sample_cycle(space, gen);
      auto q = sample_cycle(space, gen);
      if (proj_equiv(p, q)) continue;
      return Pencil<F>(p, q);
    }
  }

  CheckOutcome check_pencil_counts(const QuadSpace<F>& space) const {
    auto gen = rng(31);
    for (int i = 0; i < count_; ++i) {
      auto pencil = sample_pencil(space, gen, i);
      auto cls = classify_pencil(pencil);
      auto zeros = common_zeros(pencil, budget_);
      if (cls == PencilClass::regular_artinian) {
        if (zeros.points.size() != 2 || zeros.points[0] == zeros.points[1]) {
          return "artinian pencil without two distinct points: p=" + pstr(pencil.first()) +
                 " q=" + pstr(pencil.second());
        }
        for (const auto& pt : zeros.points) {
          bool member_isotropic = false;
          // Each point must come from an isotropic member of the pencil.
          auto embedded = point_embed(space, pt);
          if (proj_member_of_pencil(pencil, embedded)) member_isotropic = true;
          if (!member_isotropic) {
            return "artinian pencil point is not a member point: " + vstr(pt);
          }
        }
      }
      if (cls == PencilClass::singular) {
        if (zeros.points.size() != 1) {
          return "singular pencil without exactly one point: p=" + pstr(pencil.first()) +
                 " q=" + pstr(pencil.second());
        }
        if (!on_zero_set(pencil.first(), zeros.points[0]) ||
            !on_zero_set(pencil.second(), zeros.points[0])) {
          return "radical point misses a basis zero set";
        }
      }
      if constexpr (F::finite) {
        // Exhaustive confirmation over all of V.
        std::uint64_t genuine = 0;
        for_each_vpoint(space, [&](const VPoint<F>& v) {
          if (on_zero_set(pencil.first(), v) && on_zero_set(pencil.second(), v)) ++genuine;
        });
        std::uint64_t expected = cls == PencilClass::singular ? 1
                                 : cls == PencilClass::regular_artinian ? 0
                                                                        : zeros.points.size();
        if (genuine != expected) {
          return "exhaustive common-zero count " + std::to_string(genuine) + " != " +
                 std::to_string(expected);
        }
      }
    }
    return std::nullopt;
  }

  bool proj_member_of_pencil(const Pencil<F>& pencil, const Cycle<F>& x) const {
    // x lies in span{p, q} exactly when the 3 x (n+2) coordinate matrix has rank 2.
    Matrix<typename F::element_type> rows{pencil.first().coords(), pencil.second().coords(),
                                          x.coords()};
    auto pivots = rref(field_, rows);
    return pivots.size() == 2;
  }

  CheckOutcome check_pencil_duality(const QuadSpace<F>& space) const {
    auto gen = rng(32);
    for (int i = 0; i < count_; ++i) {
      auto pencil = sample_pencil(space, gen, i);
      auto cls = classify_pencil(pencil);
      auto complement = orthocomplement(space, {pencil.first(), pencil.second()});
      if (complement.size() != 1) continue;  // only the line complement is decisive here
      bool complement_isotropic = pairing(complement[0], complement[0]) == field_.zero();
      if (cls == PencilClass::regular_artinian && complement_isotropic) {
        return "Artinian pencil with isotropic complement: r=" + pstr(complement[0]);
      }
      if (complement_isotropic != (cls == PencilClass::singular)) {
        return "complement isotropy disagrees with singularity";
      }
    }
    return std::nullopt;
  }

  // ---- conjugate suite ----

  void suite_conjugate() {
    for (const auto& space : spaces()) {
      std::string d = "/dim" + std::to_string(space.dim());
      record("conjugate/certificate" + d, [&] { return check_certificate(space); });
      record("conjugate/span-converse" + d, [&] { return check_span_converse(space); });
      record("conjugate/orthogonality" + d, [&] { return check_conjugate_orthogonality(space); });
      record("conjugate/propagation" + d, [&] { return check_conjugate_propagation(space); });
    }
  }

  CheckOutcome check_certificate(const QuadSpace<F>& space) const {
    auto gen = rng(41);
    for (int i = 0; i < count_; ++i) {
      auto p = sample_non_isotropic(space, gen);
      auto m = sample_vpoint(space, gen);
      auto res = conjugate(p, m);
      if (res.image == m) {
        if (res.certificate) return std::string("fixed point with a certificate");
        continue;
      }
      if (!res.certificate) return "moved point without certificate: m=" + vstr(m);
      auto qm = point_embed(space, m).coords();
      auto qi = point_embed(space, res.image).coords();
      auto pc = p.coords();
      for (std::size_t k = 0; k < pc.size(); ++k) {
        auto lhs = res.certificate->first * qm[k] + res.certificate->second * qi[k];
        if (!(lhs == pc[k])) {
          return "certificate fails at coordinate " + std::to_string(k) + ": p=" + pstr(p) +
                 " m=" + vstr(m);
        }
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_span_converse(const QuadSpace<F>& space) const {
    auto gen = rng(42);
    for (int i = 0; i < count_; ++i) {
      auto m = sample_vpoint(space, gen);
      auto m2 = sample_vpoint(space, gen);
      if (m == m2) continue;
      auto alpha = nonzero_sample(gen);
      auto beta = nonzero_sample(gen);
      auto qm = point_embed(space, m).coords();
      auto qm2 = point_embed(space, m2).coords();
      for (std::size_t k = 0; k < qm.size(); ++k) qm[k] = alpha * qm[k] + beta * qm2[k];
      auto p = Cycle<F>::from_coords(space, qm);
      if (pairing(p, p) == field_.zero()) continue;
      if (!(reflect_point(p, m) == m2)) {
        return "span member does not swap its endpoints: p=" + pstr(p);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_conjugate_orthogonality(const QuadSpace<F>& space) const {
    auto gen = rng(43);
    for (int i = 0; i < count_; ++i) {
      auto u = sample_non_isotropic(space, gen);
      auto m = sample_vpoint(space, gen);
      auto m2 = reflect_point(u, m);
      if (m == m2) continue;
      auto v = sample_from_complement(space, gen,
                                      {point_embed(space, m), point_embed(space, m2)});
      if (!v) continue;
      if (!(pairing(u, *v) == field_.zero())) {
        return "cycle through conjugate pair not orthogonal to mirror: u=" + pstr(u) +
               " v=" + pstr(*v);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_conjugate_propagation(const QuadSpace<F>& space) const {
    auto gen = rng(44);
    for (int i = 0; i < count_; ++i) {
      auto u = sample_non_isotropic(space, gen);
      auto m = sample_vpoint(space, gen);
      auto v = sample_from_complement(space, gen, {u, point_embed(space, m)});
      if (!v) continue;
      if (!on_zero_set(*v, m)) return std::string("constructed cycle misses the base point");
      auto m2 = reflect_point(u, m);
      if (!on_zero_set(*v, m2)) {
        return "conjugate point escaped the zero set: u=" + pstr(u) + " v=" + pstr(*v) +
               " m=" + vstr(m);
      }
    }
    return std::nullopt;
  }

  // ---- stereo suite ----

  void suite_stereo() {
    for (const auto& space : spaces()) {
      std::string d = "/dim" + std::to_string(space.dim());
      record("stereo/isometry" + d, [&] { return check_stereo_isometry(space); });
      record("stereo/linearity" + d, [&] { return check_stereo_linearity(space); });
      record("stereo/roundtrip" + d, [&] { return check_stereo_roundtrip(space); });
      record("stereo/isotropic-points" + d, [&] { return check_stereo_points(space); });
    }
  }

  LorentzVec<F> sample_lorentz(const QuadSpace<F>& space, std::mt19937_64& gen) const {
    return LorentzVec<F>{field_.sample(gen), sample_vector(space, gen), field_.sample(gen)};
  }

  CheckOutcome check_stereo_isometry(const QuadSpace<F>& space) const {
    auto gen = rng(51);
    for (int i = 0; i < count_; ++i) {
      auto t = sample_lorentz(space, gen);
      auto u = sample_lorentz(space, gen);
      if (lorentz_is_zero(space, t) || lorentz_is_zero(space, u)) continue;
      auto lhs = lorentz_product(space, t, u);
      auto rhs = pairing(stereo_to_cycle(space, t), stereo_to_cycle(space, u));
      if (!(lhs == rhs)) return std::string("isometry identity fails");
    }
    return std::nullopt;
  }

  CheckOutcome check_stereo_linearity(const QuadSpace<F>& space) const {
    auto gen = rng(52);
    for (int i = 0; i < count_; ++i) {
      auto t = sample_lorentz(space, gen);
      auto u = sample_lorentz(space, gen);
      auto alpha = field_.sample(gen);
      auto beta = field_.sample(gen);
      LorentzVec<F> combo{alpha * t.x + beta * u.x,
                          vec_add<F>(vec_scale<F>(alpha, t.y), vec_scale<F>(beta, u.y)),
                          alpha * t.z + beta * u.z};
      if (lorentz_is_zero(space, combo) || lorentz_is_zero(space, t) || lorentz_is_zero(space, u)) {
        continue;
      }
      auto lhs = stereo_to_cycle(space, combo).coords();
      auto st = stereo_to_cycle(space, t).coords();
      auto su = stereo_to_cycle(space, u).coords();
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (!(lhs[k] == alpha * st[k] + beta * su[k])) return std::string("linearity fails");
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_stereo_roundtrip(const QuadSpace<F>& space) const {
    auto gen = rng(53);
    for (int i = 0; i < count_; ++i) {
      auto t = sample_lorentz(space, gen);
      if (lorentz_is_zero(space, t)) continue;
      if (!(stereo_from_cycle(stereo_to_cycle(space, t)) == t)) {
        return std::string("Lorentz roundtrip fails");
      }
      auto p = sample_cycle(space, gen);
      if (!(stereo_to_cycle(space, stereo_from_cycle(p)) == p)) {
        return "cycle roundtrip fails at p=" + pstr(p);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_stereo_points(const QuadSpace<F>& space) const {
    auto gen = rng(54);
    for (int i = 0; i < count_; ++i) {
      auto v = sample_vpoint(space, gen);
      auto t = stereo_from_cycle(point_embed(space, v));
      auto scale = nonzero_sample(gen);
      LorentzVec<F> scaled{scale * t.x, vec_scale<F>(scale, t.y), scale * t.z};
      if (!(lorentz_to_point(space, t) == v) || !(lorentz_to_point(space, scaled) == v)) {
        return "isotropic direction mapped away from " + vstr(v);
      }
      if (!(point_extract(stereo_to_cycle(space, scaled)) == v)) {
        return std::string("projection disagrees with extraction");
      }
    }
    return std::nullopt;
  }

  // ---- projline suite ----

  void suite_projline() {
    record("projline/involutions-are-reflections", [&] { return check_involutions_are_reflections(); });
    record("projline/desargues-polar", [&] { return check_desargues_polar(); });
    record("projline/conjugate-pairs", [&] { return check_conjugate_pairs(); });
    record("projline/word-homomorphism", [&] { return check_word_homomorphism(); });
  }

  BinaryQuadric<F> sample_quadric(std::mt19937_64& gen) const {
    for (;;) {
      auto a = field_.sample(gen);
      auto b = field_.sample(gen);
      auto c = field_.sample(gen);
      if (a == field_.zero() && b == field_.zero() && c == field_.zero()) continue;
      return BinaryQuadric<F>(field_, a, b, c);
    }
  }

  BinaryQuadric<F> sample_proper_quadric(std::mt19937_64& gen) const {
    for (;;) {
      auto q = sample_quadric(gen);
      if (!(q.norm() == field_.zero())) return q;
    }
  }

  CheckOutcome check_involutions_are_reflections() const {
    auto gen = rng(61);
    auto space = standard_line_space(field_);
    for (int i = 0; i < count_; ++i) {
      auto q = sample_proper_quadric(gen);
      auto inv = polar_involution(q);
      auto mirror = cycle_from_quadric(space, q);
      for (int k = 0; k < 10; ++k) {
        auto v = sample_vpoint(space, gen);
        if (!(inv.apply(v) == reflect_point(mirror, v))) {
          return "polar involution differs from reflection at v=" + vstr(v);
        }
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_desargues_polar() const {
    auto gen = rng(62);
    auto space = standard_line_space(field_);
    for (int i = 0; i < count_; ++i) {
      auto q = sample_proper_quadric(gen);
      auto mirror = cycle_from_quadric(space, q);
      auto complement = orthocomplement(space, {mirror});
      if (complement.size() != 2) return std::string("complement of a proper quadric is not a pencil");
      auto r0 = quadric_from_cycle(complement[0]);
      auto r1 = quadric_from_cycle(complement[1]);
      auto desargues = desargues_involution(r0, r1);
      auto polar = polar_involution(q);
      if (!proj_equal(desargues, polar)) {
        return "Desargues and polar involutions differ for q=(" + field_.str(q.uu()) + "," +
               field_.str(q.uv()) + "," + field_.str(q.vv()) + ")";
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_conjugate_pairs() const {
    auto gen = rng(63);
    for (int i = 0; i < count_; ++i) {
      auto u = field_.sample(gen);
      auto w = field_.sample(gen);
      if (u == w) continue;
      // Member with isotropic points u and w.
      BinaryQuadric<F> member(field_, field_.one(), -(u + w), u * w);
      auto other = sample_quadric(gen);
      if (!desargues_condition(member, other)) continue;
      auto inv = desargues_involution(member, other);
      if (!(inv.apply(VPoint<F>::finite({u})) == VPoint<F>::finite({w})) ||
          !(inv.apply(VPoint<F>::finite({w})) == VPoint<F>::finite({u}))) {
        return "involution does not swap member roots " + field_.str(u) + ", " + field_.str(w);
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_word_homomorphism() const {
    auto gen = rng(64);
    auto space = standard_line_space(field_);
    int reps = count_ / 4 + 1;
    for (int i = 0; i < reps; ++i) {
      InversiveWord<F> w1, w2;
      std::size_t l1 = gen() % 3, l2 = 1 + gen() % 2;
      for (std::size_t k = 0; k < l1; ++k) w1.emplace_back(sample_non_isotropic(space, gen));
      for (std::size_t k = 0; k < l2; ++k) w2.emplace_back(sample_non_isotropic(space, gen));
      InversiveWord<F> concat = w1;
      concat.insert(concat.end(), w2.begin(), w2.end());
      auto mc = word_to_moebius(field_, concat);
      auto split = word_to_moebius(field_, w2) * word_to_moebius(field_, w1);
      if (!proj_equal(mc, split)) return std::string("concatenation is not composition");
      for (int k = 0; k < 10; ++k) {
        auto v = sample_vpoint(space, gen);
        if (!(mc.apply(v) == apply_word(concat, v))) {
          return "Moebius action differs from reflection word at v=" + vstr(v);
        }
      }
    }
    return std::nullopt;
  }

  // ---- ninepoint suite ----

  void suite_ninepoint() {
    record("ninepoint/orthic-shape", [&] { return check_orthic_shape(); });
    record("ninepoint/incidence", [&] { return check_ninepoint_incidence(); });
    record("ninepoint/infinity-orthogonality", [&] { return check_infinity_orthogonality(); });
    record("ninepoint/polar-desargues-on-line", [&] { return check_polar_desargues_on_line(); });
    record("ninepoint/singular-restriction", [&] { return check_singular_restriction(); });
  }

  std::optional<OrthoConfig<F>> sample_config(std::mt19937_64& gen) const {
    for (int attempt = 0; attempt < 400; ++attempt) {
      PlanePoint<F> m{field_.sample(gen), field_.sample(gen)};
      PlanePoint<F> n{field_.sample(gen), field_.sample(gen)};
      PlanePoint<F> p{field_.sample(gen), field_.sample(gen)};
      try {
        return OrthoConfig<F>(field_, m, n, p);
      } catch (const error&) {
        continue;  // excluded configuration; resample
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_orthic_shape() const {
    auto gen = rng(71);
    int reps = count_ / 2 + 1;
    for (int i = 0; i < reps; ++i) {
      auto cfg = sample_config(gen);
      if (!cfg) return std::string("could not sample a valid configuration");
      auto [q0, q1] = orthic_pencil(*cfg);
      auto lambda = field_.sample(gen);
      for (const auto* q : {&q0, &q1}) {
        if (!(q->uu() == -q->vv())) return std::string("generator without opposite u^2, v^2");
      }
      auto mixed_uu = q0.uu() + lambda * q1.uu();
      auto mixed_vv = q0.vv() + lambda * q1.vv();
      if (!(mixed_uu == -mixed_vv)) return std::string("pencil member without opposite u^2, v^2");
    }
    return std::nullopt;
  }

  CheckOutcome check_ninepoint_incidence() const {
    auto gen = rng(72);
    int reps = count_ / 2 + 1;
    for (int i = 0; i < reps; ++i) {
      auto cfg = sample_config(gen);
      if (!cfg) return std::string("could not sample a valid configuration");
      auto circle = nine_point_circle(*cfg);
      auto pts = nine_points(*cfg);
      if (!pts.omitted.empty()) continue;
      if (pts.points.size() != 9) return std::string("expected nine affine points");
      for (const auto& pt : pts.points) {
        if (!(evaluate(circle, {pt.u, pt.v}) == field_.zero())) {
          return "point off the nine-point circle: " + field_.str(pt.u) + "," + field_.str(pt.v);
        }
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_infinity_orthogonality() const {
    auto gen = rng(73);
    int reps = count_ / 2 + 1;
    PlaneLine<F> infinity{field_.zero(), field_.zero(), field_.one()};
    for (int i = 0; i < reps; ++i) {
      auto cfg = sample_config(gen);
      if (!cfg) return std::string("could not sample a valid configuration");
      auto [q0, q1] = orthic_pencil(*cfg);
      auto e = eleven_point_conic(q0, q1, infinity);
      auto er = restrict_conic(e, infinity);
      for (const auto* q : {&q0, &q1}) {
        auto qr = restrict_conic(*q, infinity);
        if (!(line_pairing(er, qr) == field_.zero())) {
          return std::string("nine-point restriction not orthogonal to the pencil");
        }
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_polar_desargues_on_line() const {
    auto gen = rng(74);
    int reps = count_ / 4 + 1;
    PlaneLine<F> infinity{field_.zero(), field_.zero(), field_.one()};
    for (int i = 0; i < reps; ++i) {
      auto cfg = sample_config(gen);
      if (!cfg) return std::string("could not sample a valid configuration");
      auto [q0, q1] = orthic_pencil(*cfg);
      auto e = eleven_point_conic(q0, q1, infinity);
      auto polar = polar_involution(restrict_conic(e, infinity));
      auto desargues = desargues_involution(restrict_conic(q0, infinity),
                                            restrict_conic(q1, infinity));
      if (!proj_equal(polar, desargues)) {
        return std::string("eleven-point polar involution differs from Desargues involution");
      }
    }
    return std::nullopt;
  }

  CheckOutcome check_singular_restriction() const {
    auto gen = rng(75);
    auto cfg = sample_config(gen);
    if (!cfg) return std::string("could not sample a valid configuration");
    auto [q0, q1] = orthic_pencil(*cfg);
    // A line through two base points restricts the pencil to a singular one.
    auto through = plane::line_through(field_, cfg->m(), cfg->n());
    try {
      eleven_point_conic(q0, q1, through);
      return std::string("singular restriction was accepted");
    } catch (const error& e) {
      if (e.code() != errc::singular_restriction) return std::string("wrong error code");
    }
    try {
      desargues_involution(restrict_conic(q0, through), restrict_conic(q1, through));
      return std::string("singular pencil produced an involution");
    } catch (const error& e) {
      if (e.code() != errc::singular_pencil && e.code() != errc::singular_restriction) {
        return std::string("wrong error from singular pencil");
      }
    }
    return std::nullopt;
  }

  // ---- helpers ----

  typename F::element_type nonzero_sample(std::mt19937_64& gen) const {
    for (;;) {
      auto e = field_.sample(gen);
      if (!(e == field_.zero())) return e;
    }
  }

  Cycle<F> sample_isotropic(const QuadSpace<F>& space, std::mt19937_64& gen) const {
    auto scale = nonzero_sample(gen);
    return cycle_scale(scale, point_embed(space, sample_vpoint(space, gen)));
  }

  // Nonzero cycle vanishing at w: constant coefficient solved from the rest.
  Cycle<F> cycle_through(const QuadSpace<F>& space, std::mt19937_64& gen,
                         const std::vector<typename F::element_type>& w) const {
    for (;;) {
      auto a = field_.sample(gen);
      auto b = sample_vector(space, gen);
      if (a == field_.zero() && space.is_zero_vec(b)) continue;
      auto c = -(a * space.norm(w) + space.dot(b, w));
      return Cycle<F>(space, a, std::move(b), c);
    }
  }

  std::optional<Cycle<F>> sample_from_complement(const QuadSpace<F>& space, std::mt19937_64& gen,
                                                 const std::vector<Cycle<F>>& against) const {
    auto basis = orthocomplement(space, against);
    if (basis.empty()) return std::nullopt;
    for (int attempt = 0; attempt < 40; ++attempt) {
      auto coords = std::vector<typename F::element_type>(space.dim() + 2, field_.zero());
      bool any = false;
      for (const auto& member : basis) {
        auto coeff = field_.sample(gen);
        if (coeff == field_.zero()) continue;
        any = true;
        auto mc = member.coords();
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = coords[k] + coeff * mc[k];
      }
      if (!any) continue;
      bool zero = true;
      for (const auto& c : coords) zero = zero && c == field_.zero();
      if (zero) continue;
      auto v = Cycle<F>::from_coords(space, coords);
      if (pairing(v, v) == field_.zero()) continue;  // want a non-isotropic cycle
      return v;
    }
    return std::nullopt;
  }

  typename F::element_type square_plus_one(std::mt19937_64& gen) const {
    auto e = field_.sample(gen);
    return e * e + field_.one();
  }

  Cycle<F> circle_with_negative_size(const QuadSpace<F>& space, std::mt19937_64& gen) const {
    auto a = nonzero_sample(gen);
    auto center = sample_vector(space, gen);
    auto size = -square_plus_one(gen);  // strictly negative over an ordered field
    return cycle_from_center_size(space, a, center, size);
  }

  Cycle<F> cycle_from_center_size(const QuadSpace<F>& space, const typename F::element_type& a,
                                  const std::vector<typename F::element_type>& center,
                                  const typename F::element_type& size) const {
    auto b = vec_scale<F>(-field_.from_int(2) * a, center);
    auto c = a * (space.norm(center) - size);
    return Cycle<F>(space, a, std::move(b), c);
  }

  template <class Fn>
  void for_each_vpoint(const QuadSpace<F>& space, Fn&& fn) const {
    if constexpr (F::finite) {
      fn(VPoint<F>::at_infinity());
      std::uint64_t q = field_.order();
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < space.dim(); ++i) total *= q;
      for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t code = it;
        std::vector<typename F::element_type> coords;
        coords.reserve(space.dim());
        for (std::size_t i = 0; i < space.dim(); ++i) {
          coords.push_back(field_.element_at(code % q));
          code /= q;
        }
        fn(VPoint<F>::finite(std::move(coords)));
      }
    }
  }

  template <class Fn>
  void for_each_projective_cycle(const QuadSpace<F>& space, Fn&& fn) const {
    if constexpr (F::finite) {
      std::uint64_t q = field_.order();
      std::size_t m = space.dim() + 2;
      for (std::size_t lead = 0; lead < m; ++lead) {
        std::uint64_t free = m - lead - 1;
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < free; ++i) total *= q;
        for (std::uint64_t it = 0; it < total; ++it) {
          std::vector<typename F::element_type> coords(m, field_.zero());
          coords[lead] = field_.one();
          std::uint64_t code = it;
          for (std::size_t i = lead + 1; i < m; ++i) {
            coords[i] = field_.element_at(code % q);
            code /= q;
          }
          fn(Cycle<F>::from_coords(space, coords));
        }
      }
    }
  }

 private:
  F field_;
  std::uint64_t seed_;
  int count_;
  std::int64_t budget_;
  std::vector<Verdict> verdicts_;
};

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pairing", "reflect-equiv", "pencils", "conjugate",
                                              "stereo", "projline", "ninepoint", "all"};
  return names;
}

template <FieldType F>
std::vector<Verdict> run_suite(const F& field, const std::string& suite, std::uint64_t seed,
                               int count, std::int64_t budget = 8) {
  detail::SuiteRunner<F> runner(field, seed, count, budget);
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "pairing") runner.suite_pairing(), known = true;
  if (all || suite == "reflect-equiv") runner.suite_reflect(), known = true;
  if (all || suite == "pencils") runner.suite_pencils(), known = true;
  if (all || suite == "conjugate") runner.suite_conjugate(), known = true;
  if (all || suite == "stereo") runner.suite_stereo(), known = true;
  if (all || suite == "projline") runner.suite_projline(), known = true;
  if (all || suite == "ninepoint") runner.suite_ninepoint(), known = true;
  if (!known) fail(errc::unknown_suite, "no suite named '" + suite + "'");
  return runner.verdicts();
}

inline std::vector<Verdict> run_suite_any(const std::string& suite, const std::string& field_desc,
                                          std::uint64_t seed, int count, std::int64_t budget = 8) {
  auto field = parse_field_descriptor(field_desc);
  return std::visit([&](const auto& f) { return run_suite(f, suite, seed, count, budget); }, field);
}

}  // namespace inversive
