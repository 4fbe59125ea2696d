#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "inversive/errors.hpp"
#include "inversive/prime_field.hpp"
#include "inversive/quad_ext.hpp"
#include "inversive/rational.hpp"

namespace inversive {

/// Exact field of characteristic != 2 with decidable equality and square
/// testing. Handles are small value types; elements carry whatever context
/// their arithmetic needs, so ordinary operators work on them directly.
template <class F>
concept FieldType =
    std::regular<typename F::element_type> &&
    requires(const F f, const typename F::element_type& a, const typename F::element_type& b,
             std::mt19937_64& rng, std::string_view sv) {
      { F::ordered } -> std::convertible_to<bool>;
      { F::finite } -> std::convertible_to<bool>;
      { f.zero() } -> std::same_as<typename F::element_type>;
      { f.one() } -> std::same_as<typename F::element_type>;
      { f.from_int(std::int64_t{0}) } -> std::same_as<typename F::element_type>;
      { f.is_square(a) } -> std::same_as<bool>;
      { f.sqrt(a) } -> std::same_as<std::optional<typename F::element_type>>;
      { f.sample(rng) } -> std::same_as<typename F::element_type>;
      { f.str(a) } -> std::same_as<std::string>;
      { f.parse(sv) } -> std::same_as<std::optional<typename F::element_type>>;
      { f.descriptor() } -> std::same_as<std::string>;
      { a + b } -> std::same_as<typename F::element_type>;
      { a - b } -> std::same_as<typename F::element_type>;
      { a * b } -> std::same_as<typename F::element_type>;
      { a / b } -> std::same_as<typename F::element_type>;
      { -a } -> std::same_as<typename F::element_type>;
      { f == f } -> std::convertible_to<bool>;
    };

namespace detail {

// Raw engine draws reduced by modulus keep the streams reproducible across
// standard libraries; distribution classes would not.
inline std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rat draw_bounded_rat(std::mt19937_64& rng) {
  std::int64_t num = draw_range(rng, -12, 12);
  std::int64_t den = draw_range(rng, 1, 8);
  return make_rat(num, den);
}

}  // namespace detail

/// The rational numbers with their usual ordering.
struct RationalField {
  using element_type = Rat;
  static constexpr bool ordered = true;
  static constexpr bool finite = false;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(std::int64_t n) const { return Rat(n); }

  bool is_square(const Rat& e) const { return rat_is_square(e); }
  std::optional<Rat> sqrt(const Rat& e) const { return rat_sqrt(e); }

  int sign(const Rat& e) const { return sign_of(e); }

  /// Bounded-height fractions; consumes exactly two engine draws.
  Rat sample(std::mt19937_64& rng) const { return detail::draw_bounded_rat(rng); }

  std::string str(const Rat& e) const { return rat_str(e); }
  std::optional<Rat> parse(std::string_view sv) const { return rat_parse(sv); }
  std::string descriptor() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// F_p for an odd prime p < 2^31.
class PrimeField {
 public:
  using element_type = FpElem;
  static constexpr bool ordered = false;
  static constexpr bool finite = true;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p == 2) fail(errc::char_two, "prime field of characteristic 2");
    if (p > detail::kMaxPrime) fail(errc::not_prime, "modulus exceeds supported range");
    if (!detail::is_prime_i64(p)) fail(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
    p_ = p;
  }

  std::int64_t modulus() const { return p_; }
  std::uint64_t order() const { return static_cast<std::uint64_t>(p_); }
  FpElem element_at(std::uint64_t i) const { return FpElem(static_cast<std::int64_t>(i), p_); }

  FpElem zero() const { return FpElem(0, p_); }
  FpElem one() const { return FpElem(1, p_); }
  FpElem from_int(std::int64_t n) const { return FpElem(n, p_); }

  // Euler criterion.
  bool is_square(const FpElem& e) const {
    if (e.value() == 0) return true;
    return detail::mod_pow(e.value(), (p_ - 1) / 2, p_) == 1;
  }

  /// Least residue among the two roots, or nullopt for non-residues.
  std::optional<FpElem> sqrt(const FpElem& e) const {
    if (!is_square(e)) return std::nullopt;
    std::int64_t r = detail::sqrt_mod(e.value(), p_);
    std::int64_t other = (p_ - r) % p_;
    return FpElem(std::min(r, other), p_);
  }

  FpElem sample(std::mt19937_64& rng) const {
    return FpElem(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p_)), p_);
  }

  std::string str(const FpElem& e) const { return std::to_string(e.value()); }

  std::optional<FpElem> parse(std::string_view sv) const {
    auto r = rat_parse(sv);
    if (!r || denominator(*r) != 1) return std::nullopt;
    BigInt residue = numerator(*r) % p_;
    return FpElem(static_cast<std::int64_t>(residue), p_);
  }

  std::string descriptor() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::int64_t p_;
};

/// Q(sqrt d) for a square-free integer d that is not a square.
class QuadExtField {
 public:
  using element_type = QuadElem;
  static constexpr bool ordered = false;
  static constexpr bool finite = false;

  explicit QuadExtField(std::int64_t d) : d_(d) {
    if (d >= 0 && int_is_square(BigInt(d))) {
      fail(errc::is_square, "radicand " + std::to_string(d) + " is a square");
    }
    std::int64_t ad = d < 0 ? -d : d;
    if (ad > detail::kMaxPrime) fail(errc::degenerate_input, "radicand exceeds supported range");
    for (std::int64_t q = 2; q * q <= ad; ++q) {
      if (ad % (q * q) == 0) {
        fail(errc::not_square_free, "radicand " + std::to_string(d) + " has square factor " +
                                        std::to_string(q * q));
      }
    }
  }

  std::int64_t radicand() const { return d_; }

  QuadElem zero() const { return QuadElem(Rat(0), Rat(0), d_); }
  QuadElem one() const { return QuadElem(Rat(1), Rat(0), d_); }
  QuadElem from_int(std::int64_t n) const { return QuadElem(Rat(n), Rat(0), d_); }
  QuadElem from_parts(Rat x, Rat y) const { return QuadElem(std::move(x), std::move(y), d_); }

  // x + y*sqrt(d) is a square iff its norm x^2 - d*y^2 is a rational square n^2
  // and one of (x +- n)/2 is a rational square (two rational square tests);
  // the y = 0 case degenerates to testing x and x/d.
  bool is_square(const QuadElem& e) const {
    const Rat& x = e.rational_part();
    const Rat& y = e.radical_part();
    if (y == 0) return rat_is_square(x) || rat_is_square(x / Rat(d_));
    auto n = rat_sqrt(e.norm());
    if (!n) return false;
    return rat_is_square((x + *n) / 2) || rat_is_square((x - *n) / 2);
  }

  /// Root with nonnegative rational part (and nonnegative radical part when
  /// the rational part is zero).
  std::optional<QuadElem> sqrt(const QuadElem& e) const {
    const Rat& x = e.rational_part();
    const Rat& y = e.radical_part();
    if (y == 0) {
      if (auto r = rat_sqrt(x)) return QuadElem(*r, Rat(0), d_);
      if (auto r = rat_sqrt(x / Rat(d_))) return QuadElem(Rat(0), *r, d_);
      return std::nullopt;
    }
    auto n = rat_sqrt(e.norm());
    if (!n) return std::nullopt;
    for (const Rat& t : {(x + *n) / 2, (x - *n) / 2}) {
      auto u = rat_sqrt(t);
      if (u && *u != 0) return QuadElem(*u, y / (2 * *u), d_);
    }
    return std::nullopt;
  }

  /// Consumes exactly four engine draws per element.
  QuadElem sample(std::mt19937_64& rng) const {
    Rat x = detail::draw_bounded_rat(rng);
    Rat y = detail::draw_bounded_rat(rng);
    return QuadElem(std::move(x), std::move(y), d_);
  }

  std::string str(const QuadElem& e) const {
    return "(" + rat_str(e.rational_part()) + "," + rat_str(e.radical_part()) + ")";
  }

  /// Accepts "(x,y)" pairs or a bare rational meaning (x,0).
  std::optional<QuadElem> parse(std::string_view sv) const {
    if (!sv.empty() && sv.front() == '(') {
      if (sv.back() != ')') return std::nullopt;
      sv = sv.substr(1, sv.size() - 2);
      auto comma = sv.find(',');
      if (comma == std::string_view::npos) return std::nullopt;
      auto x = rat_parse(sv.substr(0, comma));
      auto y = rat_parse(sv.substr(comma + 1));
      if (!x || !y) return std::nullopt;
      return QuadElem(*x, *y, d_);
    }
    auto x = rat_parse(sv);
    if (!x) return std::nullopt;
    return QuadElem(*x, Rat(0), d_);
  }

  std::string descriptor() const { return "Qsqrt:" + std::to_string(d_); }

  friend bool operator==(const QuadExtField& a, const QuadExtField& b) { return a.d_ == b.d_; }

 private:
  std::int64_t d_;
};

static_assert(FieldType<RationalField>);
static_assert(FieldType<PrimeField>);
static_assert(FieldType<QuadExtField>);

/// Deterministic element stream; the same (field, seed) always replays the
/// same sequence.
template <FieldType F>
class SampleStream {
 public:
  SampleStream(F field, std::uint64_t seed) : field_(std::move(field)), rng_(seed) {}

  typename F::element_type next() { return field_.sample(rng_); }

  const F& field() const { return field_; }

 private:
  F field_;
  std::mt19937_64 rng_;
};

using AnyField = std::variant<RationalField, PrimeField, QuadExtField>;

/// Parses a field descriptor: "Q", "Fp:<p>", or "Qsqrt:<d>".
inline AnyField parse_field_descriptor(std::string_view s) {
  if (s == "Q") return RationalField{};
  auto parse_i64 = [](std::string_view t) -> std::optional<std::int64_t> {
    auto r = rat_parse(t);
    if (!r || denominator(*r) != 1) return std::nullopt;
    if (numerator(*r) > detail::kMaxPrime || numerator(*r) < -detail::kMaxPrime) return std::nullopt;
    return static_cast<std::int64_t>(numerator(*r));
  };
  if (s.substr(0, 3) == "Fp:") {
    auto p = parse_i64(s.substr(3));
    if (!p) fail(errc::parse_error, "bad prime in field descriptor '" + std::string(s) + "'");
    return PrimeField(*p);
  }
  if (s.substr(0, 6) == "Qsqrt:") {
    auto d = parse_i64(s.substr(6));
    if (!d) fail(errc::parse_error, "bad radicand in field descriptor '" + std::string(s) + "'");
    return QuadExtField(*d);
  }
  fail(errc::parse_error, "unknown field descriptor '" + std::string(s) + "'");
}

inline std::string field_descriptor(const AnyField& f) {
  return std::visit([](const auto& g) { return g.descriptor(); }, f);
}

}  // namespace inversive
