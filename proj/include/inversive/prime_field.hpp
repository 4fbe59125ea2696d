#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "inversive/errors.hpp"

namespace inversive {

namespace detail {

// Moduli are capped below 2^31 so products of reduced residues fit in int64.
inline constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Extended Euclid inverse; v must be nonzero mod p.
inline std::int64_t mod_inv(std::int64_t v, std::int64_t p) {
  std::int64_t a = mod_reduce(v, p), b = p;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) fail(errc::division_by_zero, "division by zero residue");
  return mod_reduce(x0, p);
}

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Residue in [0, p) tagged with its odd prime modulus.
class FpElem {
 public:
  FpElem() : v_(0), p_(0) {}
  FpElem(std::int64_t value, std::int64_t p) : v_(detail::mod_reduce(value, p)), p_(p) {}

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    check(a, b);
    return FpElem(a.v_ + b.v_, a.p_);
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    check(a, b);
    return FpElem(a.v_ - b.v_, a.p_);
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    check(a, b);
    return FpElem(detail::mod_mul(a.v_, b.v_, a.p_), a.p_);
  }
  friend FpElem operator/(const FpElem& a, const FpElem& b) {
    check(a, b);
    if (b.v_ == 0) fail(errc::division_by_zero, "division by zero in F_p");
    return FpElem(detail::mod_mul(a.v_, detail::mod_inv(b.v_, a.p_), a.p_), a.p_);
  }
  FpElem operator-() const { return FpElem(-v_, p_); }

  FpElem& operator+=(const FpElem& b) { return *this = *this + b; }
  FpElem& operator-=(const FpElem& b) { return *this = *this - b; }
  FpElem& operator*=(const FpElem& b) { return *this = *this * b; }
  FpElem& operator/=(const FpElem& b) { return *this = *this / b; }

 private:
  static void check(const FpElem& a, const FpElem& b) {
    if (a.p_ != b.p_) fail(errc::field_mismatch, "residues over different primes");
  }

  std::int64_t v_;
  std::int64_t p_;
};

namespace detail {

// Tonelli-Shanks; requires that v is a quadratic residue mod the odd prime p.
inline std::int64_t sqrt_mod(std::int64_t v, std::int64_t p) {
  v = mod_reduce(v, p);
  if (v == 0) return 0;
  if (p % 4 == 3) return mod_pow(v, (p + 1) / 4, p);
  std::int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(v, q, p);
  std::int64_t r = mod_pow(v, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t t2 = t;
    while (t2 != 1) {
      t2 = mod_mul(t2, t2, p);
      ++i;
    }
    std::int64_t b = mod_pow(c, std::int64_t{1} << (m - i - 1), p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return r;
}

}  // namespace detail

}  // namespace inversive
