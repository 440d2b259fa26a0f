#pragma once

#include <optional>
#include <string>

#include "nsmm/polynomial.hpp"

namespace nsmm {

/// num(z1, z2) / (z1 - z2)^k with num a Laurent polynomial (negative powers
/// of z1 and z2 allowed). Common factors of (z1 - z2) are cancelled.
class RatFunc2 {
 public:
  RatFunc2() = default;
  RatFunc2(const Rational& c) : num_(c) {}  // NOLINT
  RatFunc2(Poly2 num, int k);
  /// c * z1^a * z2^b
  static RatFunc2 monomial(int a, int b, const Rational& c = 1);
  /// c * (z1 - z2)^e for any integer e
  static RatFunc2 diff_power(int e, const Rational& c = 1);

  const Poly2& numerator() const { return num_; }
  int pole_order() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc2& operator+=(const RatFunc2& o);
  RatFunc2& operator*=(const Rational& s);
  friend RatFunc2 operator+(RatFunc2 a, const RatFunc2& b) { return a += b; }
  friend RatFunc2 operator-(RatFunc2 a, const RatFunc2& b) { return a += b * Rational(-1); }
  friend RatFunc2 operator*(RatFunc2 a, const Rational& s) { return a *= s; }
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
  friend bool operator==(const RatFunc2&, const RatFunc2&) = default;

  RatFunc2 d1() const;
  RatFunc2 d2() const;
  /// Total degree, when the numerator is homogeneous.
  std::optional<int> degree() const;
  Rational evaluate(const Rational& z1, const Rational& z2) const;
  std::string to_string() const;

 private:
  void cancel();
  Poly2 num_;
  int k_ = 0;
};

/// num(z)/den(z) over Q in lowest terms, den monic.
class URatFunc {
 public:
  URatFunc() : num_(), den_(RatVector{Rational(1)}) {}
  URatFunc(const Rational& c) : num_(RatVector{c}), den_(RatVector{Rational(1)}) {}  // NOLINT
  URatFunc(UPoly num, UPoly den);
  /// c * z^e for any integer e
  static URatFunc power(int e, const Rational& c = 1);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend URatFunc operator+(const URatFunc& a, const URatFunc& b);
  friend URatFunc operator-(const URatFunc& a, const URatFunc& b);
  friend URatFunc operator*(const URatFunc& a, const URatFunc& b);
  friend URatFunc operator/(const URatFunc& a, const URatFunc& b);
  friend URatFunc operator-(const URatFunc& a) { return URatFunc(a.num_ * Rational(-1), a.den_); }
  URatFunc& operator+=(const URatFunc& o) { return *this = *this + o; }
  friend bool operator==(const URatFunc&, const URatFunc&) = default;

  URatFunc derivative() const;
  bool analytic_at_zero() const { return den_[0] != 0; }
  Rational value_at_zero() const;
  /// First n Taylor coefficients at 0 (requires analytic_at_zero()).
  RatVector taylor(std::size_t n) const;
  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;
  std::string to_string(const char* var = "z") const;

 private:
  UPoly num_;
  UPoly den_;
};

}  // namespace nsmm
