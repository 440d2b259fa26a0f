#pragma once

// Exact arithmetic in the universal enveloping superalgebra of the N=1
// Neveu-Schwarz algebra: generators L(n), G(r) (r in 1/2 + Z) and the central
// element C, which is always substituted by a rational central charge.

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nsmm/rational.hpp"

namespace nsmm {

enum class ModeKind : std::uint8_t { Virasoro, Fermionic, Central };

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// One generator of ns. The index is stored doubled so that L(n) has an even
/// and G(r) an odd `twice_index`; both are exact.
class GeneratorMode {
 public:
  static GeneratorMode L(int n) { return GeneratorMode(ModeKind::Virasoro, 2 * n); }
  /// G(twice/2); `twice` must be odd.
  static GeneratorMode G_twice(int twice);
  /// G(r) for r a half-odd rational.
  static GeneratorMode G(const Rational& r);
  static GeneratorMode C() { return GeneratorMode(ModeKind::Central, 0); }

  ModeKind kind() const { return kind_; }
  int twice_index() const { return twice_; }
  Rational index() const { return frac(twice_, 2); }
  Parity parity() const { return kind_ == ModeKind::Fermionic ? Parity::Odd : Parity::Even; }
  bool is_fermionic() const { return kind_ == ModeKind::Fermionic; }
  bool is_central() const { return kind_ == ModeKind::Central; }
  /// Integer index of a Virasoro mode.
  int virasoro_index() const { return twice_ / 2; }

  std::string to_string() const;

  friend bool operator==(const GeneratorMode&, const GeneratorMode&) = default;
  /// Canonical PBW order: by index, central element last.
  friend std::strong_ordering operator<=>(const GeneratorMode& a, const GeneratorMode& b) {
    if (a.is_central() != b.is_central()) return a.is_central() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.twice_ <=> b.twice_; c != 0) return c;
    return a.kind_ <=> b.kind_;
  }

 private:
  GeneratorMode(ModeKind kind, int twice) : kind_(kind), twice_(twice) {}

  ModeKind kind_;
  int twice_;
};

using Word = std::vector<GeneratorMode>;

/// Total order used to store and print words: fewer factors first, then fewer
/// fermionic factors, then lexicographic by mode.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Parity parity(const Word& w);
/// Sum of -index over the word; the level a word of ns^- raises a vector by.
Rational level_of(const Word& w);
/// True when `w` is in canonical PBW order (non-decreasing index, no repeated G).
bool is_normal(const Word& w);
std::string to_string(const Word& w);

/// Finite linear combination of words with rational coefficients.
class EnvelopingElement {
 public:
  using Terms = std::map<Word, Rational, WordLess>;

  EnvelopingElement() = default;
  explicit EnvelopingElement(const Rational& scalar);
  EnvelopingElement(Word w, const Rational& coeff);
  static EnvelopingElement generator(const GeneratorMode& g) { return EnvelopingElement(Word{g}, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& coeff);
  EnvelopingElement& operator+=(const EnvelopingElement& other);
  EnvelopingElement& operator-=(const EnvelopingElement& other);
  EnvelopingElement& operator*=(const Rational& s);
  friend EnvelopingElement operator+(EnvelopingElement a, const EnvelopingElement& b) { return a += b; }
  friend EnvelopingElement operator-(EnvelopingElement a, const EnvelopingElement& b) { return a -= b; }
  friend EnvelopingElement operator*(EnvelopingElement a, const Rational& s) { return a *= s; }
  friend EnvelopingElement operator*(const Rational& s, EnvelopingElement a) { return a *= s; }
  friend bool operator==(const EnvelopingElement&, const EnvelopingElement&) = default;

  /// Parity when every word agrees; throws InhomogeneousError otherwise.
  Parity parity() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const EnvelopingElement& e) { return os << e.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GeneratorMode& g) { return os << g.to_string(); }

/// Supercommutator [a, b] (anticommutator iff both odd) with C replaced by c.
EnvelopingElement bracket(const GeneratorMode& a, const GeneratorMode& b, const Rational& c);

/// PBW normal-ordering engine for a fixed central charge. Memoizes on words;
/// safe to share between threads.
class NormalOrderer {
 public:
  explicit NormalOrderer(Rational c) : c_(std::move(c)) {}

  const Rational& central_charge() const { return c_; }

  EnvelopingElement normal_order(const Word& w);
  EnvelopingElement normal_order(const EnvelopingElement& e);
  /// Normal form of the product a*b.
  EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b);

 private:
  EnvelopingElement compute(const Word& w);

  Rational c_;
  std::mutex mutex_;
  std::unordered_map<Word, EnvelopingElement, WordHash> cache_;
};

/// One-shot helper: normal form of coeff * w in U(ns) with C = c.
EnvelopingElement normal_order(const Word& w, const Rational& coeff, const Rational& c);

/// Parses the textual grammar documented in README ("8*L(-2) - 21*L(-1)^2 +
/// 21*G(-3/2)*G(-1/2)"). Products are returned as written; normal ordering is
/// up to the caller.
std::vector<std::pair<Word, Rational>> parse_terms(std::string_view text);

/// Parses and normal-orders with C = c.
EnvelopingElement parse_element(std::string_view text, const Rational& c);

}  // namespace nsmm
