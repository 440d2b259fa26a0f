#include "nsmm/null_ode.hpp"

#include <algorithm>
#include <sstream>

namespace nsmm {

namespace {

const GeneratorMode kG = GeneratorMode::G_twice(-1);  // G(-1/2)
const GeneratorMode kL = GeneratorMode::L(-1);

bool is_lowest(const Word& w) { return w.empty() || (w.size() == 1 && w[0] == kG); }

int sign(bool negative) { return negative ? -1 : 1; }
bool odd(const Word& w) { return parity(w) == Parity::Odd; }

// X = a_r with a the field of L (omega, L(n) = omega_{n+1}) or of G
// (tau, G(s) = tau_{s+1/2}).
struct FieldMode {
  bool fermionic;
  int r;
  GeneratorMode component(int i) const {
    return fermionic ? GeneratorMode::G_twice(2 * i - 1) : GeneratorMode::L(i - 1);
  }
};

FieldMode field_mode(const GeneratorMode& x) {
  if (x.is_central()) throw InvalidArgument("the central element is not a field mode");
  if (x.is_fermionic()) return {true, (x.twice_index() + 1) / 2};
  return {false, x.virasoro_index() + 1};
}

// a_i annihilates vectors of level below i - 1 (omega) or i - 1/2 (tau).
int max_component(const Word& w) {
  const Rational twice = 2 * level_of(w);
  return static_cast<int>(twice.get_num().get_si()) / 2 + 2;
}

Rational binom(int r, int i) { return binomial(Rational(r), i); }

Component component_of(const Word& w1, const Word& w2) {
  return {static_cast<int>(w1.size()), static_cast<int>(w2.size())};
}

Word lowest(int k) { return k ? Word{kG} : Word{}; }

}  // namespace

Component parse_component(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s[0] == 'Q' || s[0] == 'R')) s = s.substr(1);
  if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
    throw ParseError("expected a component Q00, Q01, Q10 or Q11, got '" + text + "'");
  return {s[0] - '0', s[1] - '0'};
}

CorrelatorSpec CorrelatorSpec::reference_case() {
  return {frac(-11, 14), frac(-1, 14), frac(-1, 14), frac(2, 7), frac(2, 7), frac(1, 14), frac(1, 14)};
}

void add_to(DiffExpr& acc, const DiffExpr& e, const RatFunc2& factor) {
  if (factor.is_zero()) return;
  for (const auto& [t, f] : e) {
    auto it = acc.find(t);
    RatFunc2 v = f * factor;
    if (it == acc.end()) {
      if (!v.is_zero()) acc.emplace(t, std::move(v));
      continue;
    }
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

namespace {

DiffExpr diff(const DiffExpr& e, bool first) {
  DiffExpr out;
  for (const auto& [t, f] : e) {
    DiffTerm up = t;
    (first ? up.i : up.j) += 1;
    add_to(out, DiffExpr{{up, f}});
    RatFunc2 df = first ? f.d1() : f.d2();
    if (!df.is_zero()) add_to(out, DiffExpr{{t, df}});
  }
  return out;
}

}  // namespace

DiffExpr diff1(const DiffExpr& e) { return diff(e, true); }
DiffExpr diff2(const DiffExpr& e) { return diff(e, false); }

std::string to_string(const DiffExpr& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, f] : e) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.to_string() << ")";
    if (t.i) os << "*d1" << (t.i > 1 ? "^" + std::to_string(t.i) : "");
    if (t.j) os << "*d2" << (t.j > 1 ? "^" + std::to_string(t.j) : "");
    os << " " << t.q.name();
  }
  return os.str();
}

CorrelatorEngine::CorrelatorEngine(const CorrelatorSpec& spec)
    : spec_(spec), m1_(spec.c, spec.h1), m2_(spec.c, spec.h2), m3_(spec.c, spec.h3) {}

Module& CorrelatorEngine::module(int slot) {
  switch (slot) {
    case 1: return m1_;
    case 2: return m2_;
    case 3: return m3_;
    default: throw UnsupportedSlot("slot must be 1, 2 or 3");
  }
}

bool CorrelatorEngine::KeyLess::operator()(const Key& a, const Key& b) const {
  WordLess less;
  for (int s = 0; s < 3; ++s) {
    if (less(a[s], b[s])) return true;
    if (less(b[s], a[s])) return false;
  }
  return false;
}

DiffExpr CorrelatorEngine::correlator(const VermaVector& v1, const VermaVector& v2, const VermaVector& v3) {
  DiffExpr out;
  for (const auto& [w1, c1] : v1.terms())
    for (const auto& [w2, c2] : v2.terms())
      for (const auto& [w3, c3] : v3.terms()) add_to(out, words(w1, w2, w3), RatFunc2(c1 * c2 * c3));
  return out;
}

const DiffExpr& CorrelatorEngine::words(const Word& w1, const Word& w2, const Word& w3) {
  std::lock_guard lock(mutex_);
  Key key{w1, w2, w3};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  DiffExpr e = compute(w1, w2, w3);
  return memo_.emplace(std::move(key), std::move(e)).first->second;
}

DiffExpr CorrelatorEngine::compute(const Word& w1, const Word& w2, const Word& w3) {
  DiffExpr out;
  // sum over terms of a vector in one slot
  auto add_slot = [&](int slot, const VermaVector& v, const Word& a, const Word& b, const RatFunc2& f) {
    for (const auto& [w, c] : v.terms()) {
      const DiffExpr& sub = slot == 1 ? words(w, a, b) : slot == 2 ? words(a, w, b) : words(a, b, w);
      add_to(out, sub, f * c);
    }
  };

  if (!is_lowest(w1)) {
    // Y(a_r u, z1) with r < 0, expanded in |z2| < |z1|.
    const Word u(w1.begin() + 1, w1.end());
    if (w1[0] == kL) return diff1(words(u, w2, w3));
    const FieldMode x = field_mode(w1[0]);
    const int s = sign(x.fermionic && odd(u));
    for (int i = 0; i <= max_component(w2); ++i) {
      const int e = x.r - i;
      VermaVector v = m2_.verma_act(x.component(i), w2);
      // -(-1)^{|a||u|} C(r,i) (z2 - z1)^{r-i}
      add_slot(2, v, u, w3, RatFunc2::diff_power(e, binom(x.r, i) * (-s) * sign(e % 2 != 0)));
    }
    const int s2 = sign(x.fermionic && odd(w2));
    for (int i = 0; i <= max_component(w3); ++i) {
      const int e = x.r - i;
      VermaVector v = m3_.verma_act(x.component(i), w3);
      if (v.is_zero()) continue;
      for (const auto& [w, c] : v.terms())
        add_to(out, words(u, w2, w), RatFunc2::monomial(e, 0, binom(x.r, i) * c * (-s * s2) * sign(e % 2 != 0)));
    }
    return out;
  }

  if (!is_lowest(w2)) {
    const Word u(w2.begin() + 1, w2.end());
    if (w2[0] == kL) return diff2(words(w1, u, w3));
    const FieldMode x = field_mode(w2[0]);
    const int s1 = sign(x.fermionic && odd(w1));
    for (int i = 0; i <= max_component(w1); ++i) {
      VermaVector v = m1_.verma_act(x.component(i), w1);
      add_slot(1, v, u, w3, RatFunc2::diff_power(x.r - i, binom(x.r, i) * (-s1)));
    }
    const int su = sign(x.fermionic && odd(u));
    for (int i = 0; i <= max_component(w3); ++i) {
      const int e = x.r - i;
      VermaVector v = m3_.verma_act(x.component(i), w3);
      if (v.is_zero()) continue;
      for (const auto& [w, c] : v.terms())
        add_to(out, words(w1, u, w), RatFunc2::monomial(0, e, binom(x.r, i) * c * (-su) * sign(e % 2 != 0)));
    }
    return out;
  }

  if (w3.empty()) return DiffExpr{{DiffTerm{component_of(w1, w2), 0, 0}, RatFunc2(1)}};

  // Move the first mode of w3 to the left, where it annihilates w4'.
  const Word rest(w3.begin() + 1, w3.end());
  const FieldMode x = field_mode(w3[0]);
  const int e1 = sign(x.fermionic && (odd(w1) != odd(w2)));
  const int e2 = sign(x.fermionic && odd(w2));
  for (int j = 0; j <= 2; ++j) {
    VermaVector v = m1_.verma_act(x.component(j), w1);
    for (const auto& [w, c] : v.terms())
      add_to(out, words(w, w2, rest), RatFunc2::monomial(x.r - j, 0, binom(x.r, j) * c * (-e1)));
    v = m2_.verma_act(x.component(j), w2);
    for (const auto& [w, c] : v.terms())
      add_to(out, words(w1, w, rest), RatFunc2::monomial(0, x.r - j, binom(x.r, j) * c * (-e2)));
  }
  return out;
}

std::map<Component, DiffExpr> mode_transport(const GeneratorMode& mode, int slot, const CorrelatorSpec& spec) {
  if (slot < 1 || slot > 3) throw UnsupportedSlot("mode insertion is supported at slots 1, 2 and 3 only");
  CorrelatorEngine engine(spec);
  const FieldMode x = field_mode(mode);
  std::map<Component, DiffExpr> out;
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l) {
      const Word u1 = lowest(k), u2 = lowest(l);
      const VermaVector one(Word{}, 1);
      DiffExpr e;
      if (slot == 3) {
        const int s = sign(x.fermionic && (k + l) % 2 == 1);
        VermaVector v = engine.module(3).verma_act(mode, Word{});
        add_to(e, engine.correlator(VermaVector(u1, 1), VermaVector(u2, 1), v), RatFunc2(s));
      } else {
        const int s = slot == 2 ? sign(x.fermionic && k == 1) : 1;
        for (int j = 0; j <= 2; ++j) {
          const Word& u = slot == 1 ? u1 : u2;
          VermaVector v = engine.module(slot).verma_act(x.component(j), u);
          if (v.is_zero()) continue;
          const RatFunc2 f = slot == 1 ? RatFunc2::monomial(x.r - j, 0, binom(x.r, j) * s)
                                       : RatFunc2::monomial(0, x.r - j, binom(x.r, j) * s);
          add_to(e, slot == 1 ? engine.correlator(v, VermaVector(u2, 1), one)
                              : engine.correlator(VermaVector(u1, 1), v, one),
                 f);
        }
      }
      out.emplace(Component{k, l}, std::move(e));
    }
  return out;
}

DiffOpSystem derive_system(const VermaVector& null, int slot, const CorrelatorSpec& spec,
                           const std::vector<Component>& pairing) {
  if (slot < 1 || slot > 3) throw UnsupportedSlot("null vectors can be inserted at slots 1, 2 and 3 only");
  if (null.is_zero()) throw InvalidArgument("null vector is zero");
  if (pairing.empty()) throw InvalidArgument("empty component pairing");
  const int p = (pairing[0].k + pairing[0].l) % 2;
  for (const auto& q : pairing)
    if ((q.k + q.l) % 2 != p)
      throw ParityMismatch("components " + pairing[0].name() + " and " + q.name() + " have different parity");
  const int np = null.parity() == Parity::Odd ? 1 : 0;

  CorrelatorEngine engine(spec);
  DiffOpSystem sys;
  sys.unknowns = pairing;
  const VermaVector one(Word{}, 1), g(Word{kG}, 1);
  for (const auto& q : pairing) {
    // Row (a, b): a counts G(-1/2) on the null slot, b on the first other slot.
    Component row{(q.k + np) % 2, q.l};
    if (slot == 2) row = {(q.l + np) % 2, q.k};
    if (slot == 3) row = {q.k, (q.l + np) % 2};
    const VermaVector n = row.k ? engine.module(slot).verma_act(kG, null) : null;
    DiffExpr e;
    switch (slot) {
      case 1: e = engine.correlator(n, row.l ? g : one, one); break;
      case 2: e = engine.correlator(row.l ? g : one, n, one); break;
      default: e = engine.correlator(row.k ? g : one, row.l ? g : one, null);
    }
    for (const auto& [t, f] : e)
      if (std::find(pairing.begin(), pairing.end(), t.q) == pairing.end())
        throw ParityMismatch("the relation involves " + t.q.name() + ", which is not in the requested pairing");
    sys.rows.push_back(row);
    sys.equations.push_back(std::move(e));
  }
  return sys;
}

std::string to_string(const DiffOpSystem& sys) {
  std::ostringstream os;
  for (std::size_t r = 0; r < sys.equations.size(); ++r)
    os << "row " << sys.rows[r].k << sys.rows[r].l << ": " << to_string(sys.equations[r]) << " = 0\n";
  return os.str();
}

namespace {

using OdeRow = std::map<std::pair<std::size_t, int>, URatFunc>;

void accumulate(OdeRow& row, std::size_t u, int p, const URatFunc& f) {
  if (f.is_zero()) return;
  auto it = row.find({u, p});
  if (it == row.end()) {
    row.emplace(std::make_pair(u, p), f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) row.erase(it);
}

// prod over the factors (c0 + c1 theta), as a polynomial in theta
UPoly linear_product(const std::vector<std::pair<Rational, Rational>>& factors) {
  UPoly out(RatVector{Rational(1)});
  for (const auto& [c0, c1] : factors) out = out * UPoly(RatVector{c0, c1});
  return out;
}

URatFunc one_minus_z2_power(int k) {
  UPoly d(RatVector{Rational(1)});
  for (int i = 0; i < k; ++i) d = d * UPoly(RatVector{Rational(1), Rational(0), Rational(-1)});
  return URatFunc(UPoly(RatVector{Rational(1)}), d);
}

}  // namespace

OdeSystem reduce_to_one_variable(const DiffOpSystem& sys, const CorrelatorSpec& spec) {
  OdeSystem out;
  for (const auto& q : sys.unknowns) out.unknowns.push_back("R" + std::to_string(q.k) + std::to_string(q.l));
  for (const auto& eq : sys.equations) {
    std::optional<Rational> degree;
    OdeRow row;
    for (const auto& [t, f] : eq) {
      auto pos = std::find(sys.unknowns.begin(), sys.unknowns.end(), t.q);
      if (pos == sys.unknowns.end()) throw ComputationError("equation involves an unknown outside the system");
      const std::size_t u = static_cast<std::size_t>(pos - sys.unknowns.begin());
      const Rational a = spec.t1 - frac(t.q.k, 2), b = spec.t2 - frac(t.q.l, 2);
      // d1^i d2^j (z1^a z2^b R(z)) = z1^{a-i} z2^{b-j} prod (a - m - theta/2) prod (b - m + theta/2) R
      std::vector<std::pair<Rational, Rational>> factors;
      for (int m = 0; m < t.i; ++m) factors.emplace_back(a - m, frac(-1, 2));
      for (int m = 0; m < t.j; ++m) factors.emplace_back(b - m, frac(1, 2));
      const UPoly theta = linear_product(factors);
      const URatFunc pole = one_minus_z2_power(f.pole_order());
      for (const auto& [mono, c] : f.numerator().terms()) {
        const Rational d = mono.first + mono.second + a + b - t.i - t.j - f.pole_order();
        if (degree && *degree != d)
          throw InhomogeneityError("powers of z1 do not cancel: degrees " + to_string(*degree) + " and " +
                                   to_string(d));
        degree = d;
        // z2^{b' } with b' = mono.second + b - j; divide by z2^{t2}: z^{2 mono.second - l - 2j}
        const int e = 2 * mono.second - t.q.l - 2 * t.j;
        const URatFunc base = URatFunc::power(e, c) * pole;
        for (int p = 0; p <= theta.degree(); ++p)
          if (theta[p] != 0) accumulate(row, u, p, base * URatFunc(theta[p]));
      }
    }
    out.equations.push_back(std::move(row));
  }
  return out;
}

namespace {

// Stirling numbers: theta^p = sum_d S(p,d) z^d D^d and
// D^d = z^{-d} sum_p s(d,p) theta^p (signed, first kind).
Rational stirling2(int n, int k) {
  std::vector<std::vector<Rational>> s(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = Rational(j) * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

Rational stirling1(int n, int k) {
  std::vector<std::vector<Rational>> s(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] - Rational(i - 1) * s[i - 1][j];
  return s[n][k];
}

}  // namespace

OdeSystem to_theta_form(const OdeSystem& sys) {
  if (!sys.derivative_form) return sys;
  OdeSystem out{sys.unknowns, {}, false};
  for (const auto& eq : sys.equations) {
    OdeRow row;
    for (const auto& [key, f] : eq)
      for (int p = 0; p <= key.second; ++p)
        accumulate(row, key.first, p, f * URatFunc::power(-key.second, stirling1(key.second, p)));
    out.equations.push_back(std::move(row));
  }
  return out;
}

OdeSystem to_derivative_form(const OdeSystem& sys) {
  if (sys.derivative_form) return sys;
  OdeSystem out{sys.unknowns, {}, true};
  for (const auto& eq : sys.equations) {
    OdeRow row;
    for (const auto& [key, f] : eq)
      for (int d = 0; d <= key.second; ++d)
        accumulate(row, key.first, d, f * URatFunc::power(d, stirling2(key.second, d)));
    out.equations.push_back(std::move(row));
  }
  return out;
}

SolvedSystem solve_leading(const OdeSystem& sys) {
  const std::size_t n = sys.unknowns.size();
  if (sys.equations.size() != n) throw ComputationError("system must have as many equations as unknowns");
  SolvedSystem out{sys.unknowns, std::vector<int>(n, -1), std::vector<OdeRow>(n)};
  for (const auto& eq : sys.equations)
    for (const auto& [key, f] : eq) out.orders[key.first] = std::max(out.orders[key.first], key.second);
  for (std::size_t u = 0; u < n; ++u)
    if (out.orders[u] < 0) throw ComputationError("unknown " + sys.unknowns[u] + " does not occur");

  // Gauss-Jordan on [L | lower terms] over Q(z).
  std::vector<std::vector<URatFunc>> lead(n, std::vector<URatFunc>(n));
  std::vector<OdeRow> lower(n);
  for (std::size_t e = 0; e < n; ++e)
    for (const auto& [key, f] : sys.equations[e]) {
      if (key.second == out.orders[key.first])
        lead[e][key.first] = f;
      else
        accumulate(lower[e], key.first, key.second, -f);
    }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && lead[sel][c].is_zero()) ++sel;
    if (sel == n) throw ComputationError("leading coefficient matrix is singular");
    std::swap(lead[c], lead[sel]);
    std::swap(lower[c], lower[sel]);
    const URatFunc inv = URatFunc(1) / lead[c][c];
    for (auto& x : lead[c]) x = x * inv;
    OdeRow scaled;
    for (const auto& [k, f] : lower[c]) accumulate(scaled, k.first, k.second, f * inv);
    lower[c] = std::move(scaled);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || lead[r][c].is_zero()) continue;
      const URatFunc f = lead[r][c];
      for (std::size_t j = 0; j < n; ++j) lead[r][j] = lead[r][j] - f * lead[c][j];
      for (const auto& [k, g] : lower[c]) accumulate(lower[r], k.first, k.second, -(f * g));
    }
  }
  out.rhs = std::move(lower);
  return out;
}

RegularSingularSystem companion_form(const OdeSystem& sys) {
  const SolvedSystem solved = solve_leading(to_theta_form(sys));
  std::vector<std::size_t> offset;
  std::size_t size = 0;
  RegularSingularSystem out;
  for (std::size_t u = 0; u < solved.unknowns.size(); ++u) {
    if (solved.orders[u] == 0) throw ComputationError("unknown " + solved.unknowns[u] + " has order zero");
    offset.push_back(size);
    for (int s = 0; s < solved.orders[u]; ++s)
      out.labels.push_back(s == 0 ? solved.unknowns[u]
                                  : "theta" + (s > 1 ? "^" + std::to_string(s) : std::string()) + " " +
                                        solved.unknowns[u]);
    size += static_cast<std::size_t>(solved.orders[u]);
  }
  out.a.assign(size, std::vector<URatFunc>(size));
  for (std::size_t u = 0; u < solved.unknowns.size(); ++u) {
    const std::size_t top = offset[u] + static_cast<std::size_t>(solved.orders[u]) - 1;
    for (std::size_t s = offset[u]; s < top; ++s) out.a[s][s + 1] = URatFunc(1);
    for (const auto& [key, f] : solved.rhs[u]) out.a[top][offset[key.first] + static_cast<std::size_t>(key.second)] = f;
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (!out.a[i][j].analytic_at_zero())
        throw IrregularSingularity("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") of A has a pole at z = 0: " + out.a[i][j].to_string());
  return out;
}

std::vector<URatFunc> apply(const OdeSystem& sys, const std::vector<URatFunc>& r) {
  std::vector<URatFunc> out;
  for (const auto& eq : sys.equations) {
    URatFunc s;
    for (const auto& [key, f] : eq) {
      URatFunc g = r.at(key.first);
      for (int p = 0; p < key.second; ++p) g = sys.derivative_form ? g.derivative() : URatFunc::power(1) * g.derivative();
      s += f * g;
    }
    out.push_back(s);
  }
  return out;
}

namespace {

// sum c z^e over the listed (e, c)
URatFunc laurent(std::initializer_list<std::pair<int, Rational>> terms) {
  URatFunc out;
  for (const auto& [e, c] : terms) out += URatFunc::power(e, c);
  return out;
}

URatFunc z2_minus_1_power(int k) {
  URatFunc out(1);
  for (int i = 0; i < k; ++i) out = out * laurent({{2, 1}, {0, -1}});
  return out;
}

}  // namespace

OdeSystem reference_system(const std::string& which) {
  OdeSystem s;
  s.derivative_form = true;
  const URatFunc one(1);
  auto over = [](const URatFunc& num, const URatFunc& den) { return num / den; };
  if (which == "Q00,Q11") {
    s.unknowns = {"R00", "R11"};
    const URatFunc w2 = one_minus_z2_power(2);  // 1/(1-z^2)^2
    OdeRow r00, r11;
    r00[{0, 2}] = one;
    r00[{0, 1}] = -(laurent({{-1, -43}, {1, 100}, {3, -54}}) * w2 * URatFunc(frac(1, 21)));
    r00[{0, 0}] = -(laurent({{2, 23}, {-2, 23}, {0, -6}}) * w2 * URatFunc(frac(1, 147)));
    r00[{1, 0}] = over(URatFunc(4), URatFunc::power(1) * laurent({{0, 1}, {2, -1}}));
    r11[{1, 2}] = one;
    r11[{1, 1}] = -(laurent({{1, 100}, {3, -117}, {-1, -1}}) * w2 * URatFunc(frac(1, 21)));
    r11[{1, 0}] = -(URatFunc(324) * w2 * URatFunc(frac(1, 21)));
    r11[{0, 1}] = over(laurent({{1, 83}, {3, -203}, {5, 114}, {0, -21}, {2, 42}, {4, -21}}),
                       URatFunc(21) * URatFunc::power(1) * z2_minus_1_power(3));
    r11[{0, 0}] = -over(laurent({{4, 37}, {2, 6}, {0, 37}}), URatFunc(147) * URatFunc::power(1) * z2_minus_1_power(3));
    s.equations = {r00, r11};
    return s;
  }
  if (which == "Q10,Q01") {
    s.unknowns = {"R10", "R01"};
    const URatFunc w2 = z2_minus_1_power(2);
    OdeRow r10, r01;
    r10[{0, 2}] = one;
    // given as R10(z); read as the first derivative
    r10[{0, 1}] = -over(laurent({{1, 168}, {3, -118}, {-1, -116}}), URatFunc(42) * w2);
    r10[{0, 0}] = -over(laurent({{0, frac(36, 147) + frac(14700, 28182)}, {-2, frac(-348, 147)}}), w2);
    r10[{1, 1}] = -over(URatFunc(2), z2_minus_1_power(1));
    r10[{1, 0}] = -over(laurent({{-1, 2}, {1, -6}}), URatFunc(7) * w2);
    r01[{1, 2}] = one;
    // given as R01(z); read as the first derivative
    r01[{1, 1}] = over(laurent({{-1, -425}, {3, 424}}), URatFunc(7) * w2);
    r01[{1, 0}] = -over(laurent({{-2, 12}, {2, -16}}), URatFunc(147) * w2);
    // given as R10(z); read as the first derivative
    r01[{0, 1}] = -over(URatFunc(2), z2_minus_1_power(1));
    r01[{0, 0}] = over(laurent({{1, -84}, {-1, 96}}), URatFunc(21) * w2);
    s.equations = {r10, r01};
    return s;
  }
  throw InvalidArgument("no reference system for pairing '" + which + "' (use Q00,Q11 or Q10,Q01)");
}

namespace {

std::string term_name(const std::string& u, int d, bool derivative) {
  if (derivative) return u + std::string(static_cast<std::size_t>(d), '\'');
  if (d == 0) return u;
  return "theta" + (d > 1 ? "^" + std::to_string(d) : std::string()) + " " + u;
}

}  // namespace

std::vector<DiffEntry> diff_systems(const OdeSystem& ref, const OdeSystem& derived) {
  const SolvedSystem p = solve_leading(to_derivative_form(ref));
  const SolvedSystem d = solve_leading(to_derivative_form(derived));
  if (p.unknowns != d.unknowns) throw InvalidArgument("systems have different unknowns");
  std::vector<DiffEntry> out;
  for (std::size_t u = 0; u < p.unknowns.size(); ++u) {
    std::map<std::pair<std::size_t, int>, bool> keys;
    for (const auto& [k, f] : p.rhs[u]) keys[k] = true;
    for (const auto& [k, f] : d.rhs[u]) keys[k] = true;
    for (const auto& [k, unused] : keys) {
      DiffEntry e;
      e.equation = p.unknowns[u] + std::string(static_cast<std::size_t>(p.orders[u]), '\'');
      e.term = term_name(p.unknowns[k.first], k.second, true);
      if (auto it = p.rhs[u].find(k); it != p.rhs[u].end()) e.reference = it->second;
      if (auto it = d.rhs[u].find(k); it != d.rhs[u].end()) e.derived = it->second;
      e.match = e.reference == e.derived;
      if (!e.reference.is_zero() && !e.derived.is_zero()) {
        const URatFunc r = e.derived / e.reference;
        if (r.num().degree() == 0 && r.den().degree() == 0) e.ratio = r.num()[0];
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string to_string(const OdeSystem& sys) {
  std::ostringstream os;
  for (const auto& eq : sys.equations) {
    bool first = true;
    // highest powers first
    std::vector<std::pair<std::pair<std::size_t, int>, URatFunc>> terms(eq.begin(), eq.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first.second > b.first.second; });
    for (const auto& [key, f] : terms) {
      if (!first) os << " + ";
      first = false;
      os << "(" << f.to_string() << ") " << term_name(sys.unknowns[key.first], key.second, sys.derivative_form);
    }
    if (first) os << "0";
    os << " = 0\n";
  }
  return os.str();
}

std::string to_string(const RegularSingularSystem& sys) {
  std::ostringstream os;
  os << "z Y' = A(z) Y, Y = (";
  for (std::size_t i = 0; i < sys.labels.size(); ++i) os << (i ? ", " : "") << sys.labels[i];
  os << ")\n";
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!sys.a[i][j].is_zero()) os << "A[" << i << "][" << j << "] = " << sys.a[i][j].to_string() << "\n";
  return os.str();
}

}  // namespace nsmm
