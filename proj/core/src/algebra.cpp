#include "nsmm/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nsmm {

GeneratorMode GeneratorMode::G_twice(int twice) {
  if (twice % 2 == 0) throw InvalidArgument("fermionic mode index must be half-odd");
  return GeneratorMode(ModeKind::Fermionic, twice);
}

GeneratorMode GeneratorMode::G(const Rational& r) {
  if (!is_half_odd(r)) throw InvalidArgument("fermionic mode index must be half-odd, got " + nsmm::to_string(r));
  return G_twice(static_cast<int>(r.get_num().get_si()));
}

std::string GeneratorMode::to_string() const {
  switch (kind_) {
    case ModeKind::Virasoro:
      return "L(" + std::to_string(twice_ / 2) + ")";
    case ModeKind::Fermionic:
      return "G(" + std::to_string(twice_) + "/2)";
    case ModeKind::Central:
      return "C";
  }
  return "?";
}

namespace {

int fermion_count(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const GeneratorMode& g) { return g.is_fermionic(); }));
}

}  // namespace

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  int fa = fermion_count(a), fb = fermion_count(b);
  if (fa != fb) return fa < fb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (const auto& g : w) {
    auto v = static_cast<std::size_t>(g.twice_index() * 4 + static_cast<int>(g.kind()));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Parity parity(const Word& w) { return fermion_count(w) % 2 ? Parity::Odd : Parity::Even; }

Rational level_of(const Word& w) {
  int twice = 0;
  for (const auto& g : w)
    if (!g.is_central()) twice -= g.twice_index();
  return frac(twice, 2);
}

bool is_normal(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_central()) return false;
    if (i + 1 < w.size()) {
      if (w[i] > w[i + 1]) return false;
      if (w[i] == w[i + 1] && w[i].is_fermionic()) return false;
    }
  }
  return true;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += w[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

EnvelopingElement::EnvelopingElement(const Rational& scalar) {
  if (scalar != 0) terms_.emplace(Word{}, scalar);
}

EnvelopingElement::EnvelopingElement(Word w, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(std::move(w), coeff);
}

Rational EnvelopingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void EnvelopingElement::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

EnvelopingElement& EnvelopingElement::operator+=(const EnvelopingElement& other) {
  for (const auto& [w, q] : other.terms_) add_term(w, q);
  return *this;
}

EnvelopingElement& EnvelopingElement::operator-=(const EnvelopingElement& other) {
  for (const auto& [w, q] : other.terms_) add_term(w, -q);
  return *this;
}

EnvelopingElement& EnvelopingElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q *= s;
  return *this;
}

Parity EnvelopingElement::parity() const {
  std::optional<Parity> p;
  for (const auto& [w, q] : terms_) {
    Parity pw = nsmm::parity(w);
    if (p && *p != pw) throw InhomogeneousError("element mixes even and odd words: " + to_string());
    p = pw;
  }
  return p.value_or(Parity::Even);
}

std::string EnvelopingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, q] : terms_) {
    Rational mag = nsmm::abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      os << nsmm::to_string(mag);
    } else {
      if (mag != 1) os << nsmm::to_string(mag) << "*";
      os << nsmm::to_string(w);
    }
    first = false;
  }
  return os.str();
}

EnvelopingElement bracket(const GeneratorMode& a, const GeneratorMode& b, const Rational& c) {
  if (a.is_central() || b.is_central()) return {};
  const int ta = a.twice_index(), tb = b.twice_index();
  if (!a.is_fermionic() && !b.is_fermionic()) {
    const int m = ta / 2, n = tb / 2;
    EnvelopingElement out(Word{GeneratorMode::L(m + n)}, Rational(m - n));
    if (m + n == 0) out += EnvelopingElement(c * frac(m * m * m - m, 12));
    return out;
  }
  if (!a.is_fermionic() && b.is_fermionic()) {
    // [L(m), G(s)] = (m/2 - s) G(m + s)
    return EnvelopingElement(Word{GeneratorMode::G_twice(ta + tb)}, frac(ta - 2 * tb, 4));
  }
  if (a.is_fermionic() && !b.is_fermionic()) {
    return EnvelopingElement(Word{GeneratorMode::G_twice(ta + tb)}, frac(2 * ta - tb, 4));
  }
  // [G(r), G(s)] = 2 L(r + s) + (c/3)(r^2 - 1/4) delta_{r+s,0}
  EnvelopingElement out(Word{GeneratorMode::L((ta + tb) / 2)}, Rational(2));
  if (ta + tb == 0) {
    Rational r(ta, 2);
    out += EnvelopingElement(c / 3 * (r * r - frac(1, 4)));
  }
  return out;
}

EnvelopingElement NormalOrderer::normal_order(const Word& w) {
  if (is_normal(w)) return EnvelopingElement(w, 1);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  EnvelopingElement result = compute(w);
  std::lock_guard lock(mutex_);
  cache_.emplace(w, result);
  return result;
}

EnvelopingElement NormalOrderer::compute(const Word& w) {
  // The central element acts as the scalar c.
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_central()) {
      Word rest(w);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      return normal_order(rest) * c_;
    }
  }
  std::size_t i = 0;
  for (; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].is_fermionic())) break;
  }
  const GeneratorMode& a = w[i];
  const GeneratorMode& b = w[i + 1];
  Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());

  EnvelopingElement result;
  EnvelopingElement br = bracket(a, b, c_);
  Rational bracket_scale = 1;
  if (a == b) {
    // G(r)^2 = [G(r), G(r)] / 2
    bracket_scale = frac(1, 2);
  } else {
    Word swapped = prefix;
    swapped.push_back(b);
    swapped.push_back(a);
    swapped.insert(swapped.end(), suffix.begin(), suffix.end());
    Rational sign = (a.is_fermionic() && b.is_fermionic()) ? -1 : 1;
    result += normal_order(swapped) * sign;
  }
  for (const auto& [mid, q] : br.terms()) {
    Word next = prefix;
    next.insert(next.end(), mid.begin(), mid.end());
    next.insert(next.end(), suffix.begin(), suffix.end());
    result += normal_order(next) * (q * bracket_scale);
  }
  return result;
}

EnvelopingElement NormalOrderer::normal_order(const EnvelopingElement& e) {
  EnvelopingElement out;
  for (const auto& [w, q] : e.terms()) out += normal_order(w) * q;
  return out;
}

EnvelopingElement NormalOrderer::multiply(const EnvelopingElement& a, const EnvelopingElement& b) {
  EnvelopingElement out;
  for (const auto& [wa, qa] : a.terms()) {
    for (const auto& [wb, qb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += normal_order(w) * (qa * qb);
    }
  }
  return out;
}

EnvelopingElement normal_order(const Word& w, const Rational& coeff, const Rational& c) {
  NormalOrderer no(c);
  return no.normal_order(w) * coeff;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  std::vector<std::pair<Word, Rational>> parse() {
    std::vector<std::pair<Word, Rational>> out;
    if (s_ == "0") return out;
    if (s_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [w, q] = term();
      out.emplace_back(std::move(w), sign * q);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  long small_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    long v = std::stol(digits());
    return neg ? -v : v;
  }

  Rational coefficient() {
    bool paren = peek() == '(';
    if (paren) ++pos_;
    std::string text;
    if (paren && (peek() == '-' || peek() == '+')) text.push_back(s_[pos_++]);
    text += digits();
    if (peek() == '/') {
      ++pos_;
      text += "/" + digits();
    }
    if (paren) expect(')');
    return parse_rational(text);
  }

  bool at_generator() const { return peek() == 'L' || peek() == 'G' || peek() == 'C'; }

  std::pair<Word, Rational> term() {
    Rational q = 1;
    if (!at_generator()) {
      q = coefficient();
      if (peek() == '*') {
        ++pos_;
        if (!at_generator()) fail("expected a generator after '*'");
      } else if (!at_generator()) {
        return {Word{}, q};
      }
    }
    Word w;
    while (at_generator()) {
      GeneratorMode g = generator();
      long power = 1;
      if (peek() == '^') {
        ++pos_;
        power = std::stol(digits());
      }
      for (long k = 0; k < power; ++k) w.push_back(g);
      if (peek() == '*') {
        ++pos_;
        if (!at_generator()) fail("expected a generator after '*'");
      }
    }
    return {std::move(w), q};
  }

  GeneratorMode generator() {
    char kind = s_[pos_++];
    if (kind == 'C') return GeneratorMode::C();
    expect('(');
    long num = small_int();
    GeneratorMode g = GeneratorMode::C();
    if (kind == 'L') {
      if (peek() == '/') fail("Virasoro index must be an integer");
      g = GeneratorMode::L(static_cast<int>(num));
    } else {
      expect('/');
      if (digits() != "2") fail("fermionic index must be written p/2");
      if (num % 2 == 0) fail("fermionic index numerator must be odd");
      g = GeneratorMode::G_twice(static_cast<int>(num));
    }
    expect(')');
    return g;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::pair<Word, Rational>> parse_terms(std::string_view text) { return TermParser(text).parse(); }

EnvelopingElement parse_element(std::string_view text, const Rational& c) {
  NormalOrderer no(c);
  EnvelopingElement out;
  for (const auto& [w, q] : parse_terms(text)) out += no.normal_order(w) * q;
  return out;
}

}  // namespace nsmm
