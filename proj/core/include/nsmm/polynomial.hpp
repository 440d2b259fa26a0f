#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsmm/linalg.hpp"
#include "nsmm/rational.hpp"

namespace nsmm {

/// Exponent pair (deg_x, deg_y).
using Monomial = std::pair<int, int>;

/// Graded reverse lexicographic order with x > y; `operator()` is "greater",
/// so maps keyed with it iterate from the leading monomial down.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.second < b.second;
  }
};

/// Polynomial in x, y over Q.
class Poly2 {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexGreater>;

  Poly2() = default;
  Poly2(const Rational& constant);  // NOLINT: implicit scalar embedding is convenient
  Poly2(int constant) : Poly2(Rational(constant)) {}  // NOLINT
  static Poly2 x() { return monomial(1, 0); }
  static Poly2 y() { return monomial(0, 1); }
  static Poly2 monomial(int i, int j, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Monomial leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;

  void add_term(const Monomial& m, const Rational& c);
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& s);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) { return a *= Rational(-1); }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  Poly2 shifted(int i, int j, const Rational& c) const;  // c * x^i y^j * this
  Poly2 monic() const;
  /// Integer coefficients, gcd 1, positive leading coefficient.
  Poly2 primitive_form() const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  /// Substitutes y := x; coefficients low to high.
  RatVector diagonal() const;

  std::string to_string(const char* vx = "x", const char* vy = "y") const;

 private:
  Terms terms_;
};

/// Remainder of full reduction of f by g (in order).
Poly2 reduce(const Poly2& f, const std::vector<Poly2>& g);

/// Reduced Groebner basis (monic, sorted by leading monomial, descending).
std::vector<Poly2> groebner_basis(std::vector<Poly2> generators);

bool ideal_contains(const std::vector<Poly2>& groebner, const Poly2& f);

/// Univariate polynomial over Q; coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(RatVector coeffs);
  static UPoly x() { return UPoly(RatVector{Rational(0), Rational(1)}); }

  const RatVector& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading_coefficient() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  RatVector c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

/// Distinct rational roots, ascending (rational root theorem).
std::vector<Rational> rational_roots(const UPoly& f);

}  // namespace nsmm
