#include "nsmm/ratfunc.hpp"

#include <map>
#include <optional>

namespace nsmm {

namespace {

// (z1 - z2)^e as a polynomial, e >= 0.
Poly2 diff_poly(int e) {
  Poly2 out(1);
  const Poly2 d = Poly2::x() - Poly2::y();
  for (int i = 0; i < e; ++i) out = out * d;
  return out;
}

// Divides by (z1 - z2) when exact.
std::optional<Poly2> divide_by_diff(const Poly2& p) {
  std::map<int, std::map<int, Rational>> by_degree;  // degree -> (z2 exponent -> coeff)
  for (const auto& [m, c] : p.terms()) by_degree[m.first + m.second][m.second] = c;
  Poly2 q;
  for (const auto& [d, row] : by_degree) {
    Rational acc = 0;
    for (const auto& [b, c] : row) {
      acc += c;
      if (std::next(row.find(b)) == row.end()) break;
      // q_b = sum_{b' <= b} c_{b'} on exponents between consecutive entries
      const int next_b = std::next(row.find(b))->first;
      for (int bb = b; bb < next_b; ++bb) q.add_term({d - 1 - bb, bb}, acc);
    }
    if (acc != 0) return std::nullopt;
  }
  return q;
}

}  // namespace

RatFunc2::RatFunc2(Poly2 num, int k) : num_(std::move(num)), k_(k) { cancel(); }

RatFunc2 RatFunc2::monomial(int a, int b, const Rational& c) { return RatFunc2(Poly2::monomial(a, b, c), 0); }

RatFunc2 RatFunc2::diff_power(int e, const Rational& c) {
  if (e >= 0) return RatFunc2(diff_poly(e) * Poly2(c), 0);
  return RatFunc2(Poly2(c), -e);
}

void RatFunc2::cancel() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto q = divide_by_diff(num_);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

RatFunc2& RatFunc2::operator+=(const RatFunc2& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int k = std::max(k_, o.k_);
  num_ = num_ * diff_poly(k - k_) + o.num_ * diff_poly(k - o.k_);
  k_ = k;
  cancel();
  return *this;
}

RatFunc2& RatFunc2::operator*=(const Rational& s) {
  num_ *= s;
  if (num_.is_zero()) k_ = 0;
  return *this;
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) { return RatFunc2(a.num_ * b.num_, a.k_ + b.k_); }

namespace {

Poly2 partial(const Poly2& p, bool first) {
  Poly2 out;
  for (const auto& [m, c] : p.terms()) {
    const int e = first ? m.first : m.second;
    if (e == 0) continue;
    out.add_term(first ? Monomial{m.first - 1, m.second} : Monomial{m.first, m.second - 1}, c * e);
  }
  return out;
}

}  // namespace

RatFunc2 RatFunc2::d1() const {
  // (num/D^k)' = (num' D - k num) / D^{k+1}, D = z1 - z2, dD/dz1 = 1
  if (k_ == 0) return RatFunc2(partial(num_, true), 0);
  return RatFunc2(partial(num_, true) * (Poly2::x() - Poly2::y()) - num_ * Poly2(k_), k_ + 1);
}

RatFunc2 RatFunc2::d2() const {
  if (k_ == 0) return RatFunc2(partial(num_, false), 0);
  return RatFunc2(partial(num_, false) * (Poly2::x() - Poly2::y()) + num_ * Poly2(k_), k_ + 1);
}

std::optional<int> RatFunc2::degree() const {
  if (is_zero()) return std::nullopt;
  std::optional<int> d;
  for (const auto& [m, c] : num_.terms()) {
    const int e = m.first + m.second;
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return *d - k_;
}

Rational RatFunc2::evaluate(const Rational& z1, const Rational& z2) const {
  return num_.evaluate(z1, z2) / pow(Rational(z1 - z2), k_);
}

std::string RatFunc2::to_string() const {
  std::string s = num_.to_string("z1", "z2");
  if (k_ == 0) return s;
  return "(" + s + ")/(z1 - z2)" + (k_ > 1 ? "^" + std::to_string(k_) : "");
}

URatFunc::URatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw ComputationError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(RatVector{Rational(1)});
    return;
  }
  UPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational lc = den.leading_coefficient();
  num_ = num * Rational(1 / lc);
  den_ = den * Rational(1 / lc);
}

URatFunc URatFunc::power(int e, const Rational& c) {
  RatVector mono(static_cast<std::size_t>(std::abs(e)) + 1, Rational(0));
  mono.back() = 1;
  if (e >= 0) return URatFunc(UPoly(mono) * c, UPoly(RatVector{Rational(1)}));
  return URatFunc(UPoly(RatVector{c}), UPoly(mono));
}

URatFunc operator+(const URatFunc& a, const URatFunc& b) {
  if (a.den_ == b.den_) return URatFunc(a.num_ + b.num_, a.den_);
  return URatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

URatFunc operator-(const URatFunc& a, const URatFunc& b) { return a + (-b); }

URatFunc operator*(const URatFunc& a, const URatFunc& b) { return URatFunc(a.num_ * b.num_, a.den_ * b.den_); }

URatFunc operator/(const URatFunc& a, const URatFunc& b) {
  if (b.is_zero()) throw ComputationError("division by the zero rational function");
  return URatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

URatFunc URatFunc::derivative() const {
  return URatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational URatFunc::value_at_zero() const {
  if (!analytic_at_zero()) throw IrregularSingularity("rational function has a pole at 0");
  return num_[0] / den_[0];
}

RatVector URatFunc::taylor(std::size_t n) const {
  if (!analytic_at_zero()) throw IrregularSingularity("rational function has a pole at 0");
  RatVector out(n, Rational(0));
  const Rational d0 = den_[0];
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = num_[k];
    for (std::size_t j = 1; j <= k && j < den_.coeffs().size(); ++j) s -= den_[j] * out[k - j];
    out[k] = s / d0;
  }
  return out;
}

Rational URatFunc::evaluate(const Rational& z) const { return num_.evaluate(z) / den_.evaluate(z); }

double URatFunc::evaluate(double z) const { return num_.evaluate(z) / den_.evaluate(z); }

std::string URatFunc::to_string(const char* var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace nsmm
