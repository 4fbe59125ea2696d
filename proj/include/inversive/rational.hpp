#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "inversive/errors.hpp"

namespace inversive {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with unique canonical form: reduced, positive denominator.
/// Expression templates are disabled so arithmetic yields plain values, which
/// generic code stores via auto.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  return Rat(num) / Rat(den);
}

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  return make_rat(BigInt(num), BigInt(den));
}

inline int sign_of(const Rat& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

/// Floor square root test for nonnegative integers.
inline bool int_is_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// A reduced fraction n/d is a square in Q exactly when n and d are both
// integer squares.
inline bool rat_is_square(const Rat& r) {
  return int_is_square(numerator(r)) && int_is_square(denominator(r));
}

/// Nonnegative exact square root, or nullopt when none exists in Q.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  BigInt rn, rd;
  if (!int_is_square(numerator(r), &rn) || !int_is_square(denominator(r), &rd)) {
    return std::nullopt;
  }
  return make_rat(rn, rd);
}

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::optional<Rat> rat_parse(std::string_view text) {
  auto parse_int = [](std::string_view s, BigInt* out) -> bool {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') return false;
    }
    *out = BigInt(std::string(s));
    return true;
  };
  BigInt num, den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, &num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), &num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), &den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return make_rat(num, den);
}

}  // namespace inversive
