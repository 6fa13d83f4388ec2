// Half-integers stored exactly as twice their value. The endpoint weights
// 1/2 sgn(Q) make path indices half-integral; no floating point is involved.
#pragma once

#include <ostream>
#include <string>

#include "twistlab/rational.hpp"

namespace twistlab {

class HalfInteger {
 public:
  HalfInteger() : twice_(0) {}

  static HalfInteger from_twice(BigInt twice_value) {
    HalfInteger h;
    h.twice_ = std::move(twice_value);
    return h;
  }
  static HalfInteger whole(const BigInt& value) {
    return from_twice(value * 2);
  }

  const BigInt& twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  bool is_odd_integer() const {
    return is_integer() && (twice_ / 2) % 2 != 0;
  }
  int sign() const { return twice_ == 0 ? 0 : (twice_ > 0 ? 1 : -1); }

  Rational to_rational() const { return Rational(twice_, 2); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  HalfInteger operator-() const { return from_twice(-twice_); }
  HalfInteger& operator+=(const HalfInteger& o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInteger& operator-=(const HalfInteger& o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend HalfInteger operator+(HalfInteger a, const HalfInteger& b) {
    return a += b;
  }
  friend HalfInteger operator-(HalfInteger a, const HalfInteger& b) {
    return a -= b;
  }
  friend HalfInteger operator*(const BigInt& k, const HalfInteger& h) {
    return from_twice(k * h.twice_);
  }

  friend bool operator==(const HalfInteger& a, const HalfInteger& b) {
    return a.twice_ == b.twice_;
  }
  friend bool operator!=(const HalfInteger& a, const HalfInteger& b) {
    return !(a == b);
  }
  friend bool operator<(const HalfInteger& a, const HalfInteger& b) {
    return a.twice_ < b.twice_;
  }

  std::string str() const { return to_rational().str(); }

  friend std::ostream& operator<<(std::ostream& os, const HalfInteger& h) {
    return os << h.str();
  }

 private:
  BigInt twice_;
};

}  // namespace twistlab
