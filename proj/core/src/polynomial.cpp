#include "nsmm/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace nsmm {

Poly2::Poly2(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

Poly2 Poly2::monomial(int i, int j, const Rational& c) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

Rational Poly2::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
  return is_zero() ? -1 : leading_monomial().first + leading_monomial().second;
}

void Poly2::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& s) {
  if (s == 0) terms_.clear();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

Poly2 Poly2::shifted(int i, int j, const Rational& c) const {
  Poly2 out;
  if (c == 0) return out;
  for (const auto& [m, q] : terms_) out.terms_.emplace(Monomial{m.first + i, m.second + j}, q * c);
  return out;
}

Poly2 Poly2::monic() const {
  Poly2 out = *this;
  if (!is_zero()) out *= Rational(1 / leading_coefficient());
  return out;
}

Poly2 Poly2::primitive_form() const {
  if (is_zero()) return *this;
  RatVector cs;
  for (const auto& [m, c] : terms_) cs.push_back(c);
  IntVector ints = primitive(cs);
  if (ints[0] < 0)
    for (auto& v : ints) v = -v;
  Poly2 out;
  std::size_t i = 0;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(ints[i++]));
  return out;
}

Rational Poly2::evaluate(const Rational& x, const Rational& y) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c * pow(x, m.first) * pow(y, m.second);
  return s;
}

RatVector Poly2::diagonal() const {
  RatVector out(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1, Rational(0));
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.first + m.second)] += c;
  return out;
}

namespace {

std::string monomial_text(const Monomial& m, const char* vx, const char* vy) {
  std::string out;
  auto factor = [&](const char* v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  };
  factor(vx, m.first);
  factor(vy, m.second);
  return out;
}

}  // namespace

std::string Poly2::to_string(const char* vx, const char* vy) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string mono = monomial_text(m, vx, vy);
    if (mono.empty())
      os << nsmm::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << nsmm::to_string(mag) << "*" << mono;
    first = false;
  }
  return os.str();
}

namespace {

bool divides(const Monomial& a, const Monomial& b) { return a.first <= b.first && a.second <= b.second; }

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.first, b.first), std::max(a.second, b.second)};
}

}  // namespace

Poly2 reduce(const Poly2& f, const std::vector<Poly2>& g) {
  Poly2 p = f, r;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.is_zero()) continue;
      const Monomial lg = gi.leading_monomial();
      if (!divides(lg, lm)) continue;
      p -= gi.shifted(lm.first - lg.first, lm.second - lg.second, lc / gi.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

std::vector<Poly2> groebner_basis(std::vector<Poly2> generators) {
  std::vector<Poly2> g;
  for (auto& p : generators)
    if (!p.is_zero()) g.push_back(p.monic());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial li = g[i].leading_monomial(), lj = g[j].leading_monomial();
    // Buchberger's first criterion: coprime leading monomials.
    if ((li.first == 0 || lj.first == 0) && (li.second == 0 || lj.second == 0)) continue;
    const Monomial l = lcm(li, lj);
    Poly2 s = g[i].shifted(l.first - li.first, l.second - li.second, 1) -
              g[j].shifted(l.first - lj.first, l.second - lj.second, 1);
    Poly2 r = reduce(s, g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }
  // Minimize, then inter-reduce.
  std::vector<Poly2> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial li = g[i].leading_monomial(), lj = g[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly2> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly2> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly2 lead = Poly2::monomial(minimal[i].leading_monomial().first, minimal[i].leading_monomial().second);
    Poly2 tail = minimal[i] - lead;
    reduced.push_back((lead + reduce(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly2& a, const Poly2& b) {
    return GrevlexGreater{}(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

bool ideal_contains(const std::vector<Poly2>& groebner, const Poly2& f) { return reduce(f, groebner).is_zero(); }

UPoly::UPoly(RatVector coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVector out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

UPoly UPoly::monic() const { return is_zero() ? *this : *this * (1 / leading_coefficient()); }

UPoly UPoly::derivative() const {
  RatVector out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UPoly(std::move(out));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

double UPoly::evaluate(double x) const {
  double s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
  return s;
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    if (mono.empty())
      os << nsmm::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << nsmm::to_string(mag) << "*" << mono;
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ComputationError("polynomial division by zero");
  RatVector q(std::max(a.degree() - b.degree() + 1, 0), Rational(0));
  UPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational f = r.leading_coefficient() / b.leading_coefficient();
    q[static_cast<std::size_t>(shift)] = f;
    RatVector t(static_cast<std::size_t>(shift), Rational(0));
    t.insert(t.end(), b.coeffs().begin(), b.coeffs().end());
    r -= UPoly(std::move(t)) * f;
  }
  return {UPoly(std::move(q)), r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  long steps = 0;
  while (d * d <= n) {
    if (++steps > 20000000) throw ComputationError("rational root search: integer too large to factor");
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
    d += (d == 2 ? 1 : 2);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw ComputationError("the zero polynomial has no finite root set");
  std::set<Rational> roots;
  RatVector cs = f.coeffs();
  std::size_t low = 0;
  while (cs[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  cs.erase(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(low));
  UPoly g(cs);
  if (g.degree() > 0) {
    IntVector ints = primitive(g.coeffs());
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int s : {1, -1}) {
          Rational r(p * s, q);
          r.canonicalize();
          if (g.evaluate(r) == 0) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace nsmm
