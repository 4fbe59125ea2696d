#pragma once

#include <cstdint>
#include <string>

#include "inversive/errors.hpp"
#include "inversive/rational.hpp"

namespace inversive {

/// Element x + y*sqrt(d) of a real or imaginary quadratic extension of Q.
/// d is carried with the element; it is a square-free integer, never a square.
class QuadElem {
 public:
  QuadElem() : x_(0), y_(0), d_(0) {}
  QuadElem(Rat x, Rat y, std::int64_t d) : x_(std::move(x)), y_(std::move(y)), d_(d) {}

  const Rat& rational_part() const { return x_; }
  const Rat& radical_part() const { return y_; }
  std::int64_t radicand() const { return d_; }

  /// Field norm x^2 - d*y^2; zero only for the zero element.
  Rat norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

  friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    check(a, b);
    return QuadElem(a.x_ + b.x_, a.y_ + b.y_, a.d_);
  }
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    check(a, b);
    return QuadElem(a.x_ - b.x_, a.y_ - b.y_, a.d_);
  }
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    check(a, b);
    return QuadElem(a.x_ * b.x_ + Rat(a.d_) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, a.d_);
  }
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    check(a, b);
    Rat n = b.norm();
    if (n == 0) fail(errc::division_by_zero, "division by zero in quadratic extension");
    QuadElem conj(b.x_, -b.y_, b.d_);
    QuadElem prod = a * conj;
    return QuadElem(prod.x_ / n, prod.y_ / n, a.d_);
  }
  QuadElem operator-() const { return QuadElem(-x_, -y_, d_); }

  QuadElem& operator+=(const QuadElem& b) { return *this = *this + b; }
  QuadElem& operator-=(const QuadElem& b) { return *this = *this - b; }
  QuadElem& operator*=(const QuadElem& b) { return *this = *this * b; }
  QuadElem& operator/=(const QuadElem& b) { return *this = *this / b; }

 private:
  static void check(const QuadElem& a, const QuadElem& b) {
    if (a.d_ != b.d_) fail(errc::field_mismatch, "elements of different quadratic extensions");
  }

  Rat x_;
  Rat y_;
  std::int64_t d_;
};

}  // namespace inversive
