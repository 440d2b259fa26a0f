#include <gtest/gtest.h>

#include <random>

#include "nsmm/algebra.hpp"

using namespace nsmm;

namespace {

EnvelopingElement E(std::string_view s, const Rational& c = 0) { return parse_element(s, c); }

std::vector<GeneratorMode> generators_up_to(int twice_max) {
  std::vector<GeneratorMode> out;
  for (int t = -twice_max; t <= twice_max; ++t) out.push_back(t % 2 ? GeneratorMode::G_twice(t) : GeneratorMode::L(t / 2));
  out.push_back(GeneratorMode::C());
  return out;
}

// [a, X] extended linearly to an element X (super-derivation on words).
EnvelopingElement bracket_with(NormalOrderer& no, const GeneratorMode& a, const EnvelopingElement& x) {
  EnvelopingElement ax = no.multiply(EnvelopingElement::generator(a), x);
  EnvelopingElement xa = no.multiply(x, EnvelopingElement::generator(a));
  Rational sign = (a.is_fermionic() && !x.is_zero() && x.parity() == Parity::Odd) ? -1 : 1;
  return ax - xa * sign;
}

}  // namespace

TEST(Bracket, ReferenceExamples) {
  Rational c = parse_rational("-11/14");
  EXPECT_EQ(bracket(GeneratorMode::L(2), GeneratorMode::L(-2), c), E("4*L(0)") + EnvelopingElement(c / 2));
  EXPECT_EQ(bracket(GeneratorMode::G_twice(1), GeneratorMode::G_twice(-1), c), E("2*L(0)"));
  EXPECT_EQ(bracket(GeneratorMode::L(-2), GeneratorMode::G_twice(3), c), E("-5/2*G(-1/2)"));
}

TEST(Bracket, CentralTermOfFermions) {
  // [G(3/2), G(-3/2)] = 2 L(0) + (c/3)(9/4 - 1/4)
  Rational c = 3;
  EXPECT_EQ(bracket(GeneratorMode::G_twice(3), GeneratorMode::G_twice(-3), c), E("2*L(0)") + EnvelopingElement(Rational(2)));
}

TEST(Bracket, SuperSkewSymmetry) {
  Rational c(7, 3);
  auto gens = generators_up_to(10);
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Rational sign = (a.is_fermionic() && b.is_fermionic()) ? 1 : -1;
      EXPECT_EQ(bracket(a, b, c), bracket(b, a, c) * sign) << a.to_string() << " " << b.to_string();
    }
}

TEST(NormalOrder, Examples) {
  Rational c(5);
  EXPECT_EQ(normal_order({GeneratorMode::G_twice(-1), GeneratorMode::G_twice(-1)}, 1, c), E("L(-1)"));
  EXPECT_EQ(normal_order({GeneratorMode::L(1), GeneratorMode::L(-1)}, 1, c), E("L(-1)*L(1) + 2*L(0)"));
  EXPECT_EQ(normal_order({GeneratorMode::L(-1), GeneratorMode::G_twice(-3)}, 1, c), E("G(-3/2)*L(-1) + G(-5/2)"));
  EXPECT_EQ(normal_order({GeneratorMode::L(2)}, 3, c), E("3*L(2)"));
}

TEST(NormalOrder, NoRepeatedFermions) {
  NormalOrderer no(frac(1, 2));
  EnvelopingElement e = no.normal_order(Word{GeneratorMode::G_twice(3), GeneratorMode::G_twice(-5), GeneratorMode::G_twice(-5),
                                             GeneratorMode::G_twice(3), GeneratorMode::L(-2)});
  for (const auto& [w, q] : e.terms()) EXPECT_TRUE(is_normal(w)) << to_string(w);
}

TEST(Parity, Examples) {
  EXPECT_EQ(E("L(-2)").parity(), Parity::Even);
  EXPECT_EQ(E("G(-3/2)*G(-1/2)").parity(), Parity::Even);
  EXPECT_EQ(E("G(-5/2)").parity(), Parity::Odd);
  EXPECT_THROW(E("L(-1) + G(-1/2)").parity(), InhomogeneousError);
}

TEST(Parser, RoundTrip) {
  std::string text = "8*L(-2) - 21*L(-1)^2 + 21*G(-3/2)*G(-1/2)";
  EnvelopingElement e = E(text, parse_rational("-11/14"));
  EXPECT_EQ(e.to_string(), text);
  EXPECT_EQ(E(e.to_string()), e);
  EXPECT_EQ(E("(-3/2)L(-1)G(-1/2) + 1/2"), E("1/2 - 3/2*L(-1)*G(-1/2)"));
  EXPECT_EQ(E("C*L(-1)", 4), E("4*L(-1)"));
  EXPECT_EQ(E("0").to_string(), "0");
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_terms("L(1/2)"), ParseError);
  EXPECT_THROW(parse_terms("G(1)"), ParseError);
  EXPECT_THROW(parse_terms("G(2/2)"), ParseError);
  EXPECT_THROW(parse_terms("L(-1) L"), ParseError);
  EXPECT_THROW(parse_terms("0.5*L(-1)"), ParseError);
  EXPECT_THROW(parse_terms(""), ParseError);
}

TEST(NormalOrder, SuperJacobi) {
  Rational c(-11, 14);
  NormalOrderer no(c);
  auto gens = generators_up_to(8);
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& d : gens) {
        auto par = [](const GeneratorMode& x, const GeneratorMode& y) {
          return Rational(x.is_fermionic() && y.is_fermionic() ? -1 : 1);
        };
        EnvelopingElement total = bracket_with(no, a, bracket(b, d, c)) * par(a, d) +
                                  bracket_with(no, b, bracket(d, a, c)) * par(b, a) +
                                  bracket_with(no, d, bracket(a, b, c)) * par(d, b);
        ASSERT_TRUE(total.is_zero()) << a.to_string() << " " << b.to_string() << " " << d.to_string();
      }
}

TEST(NormalOrder, AssociativityRandomWords) {
  Rational c(3, 7);
  NormalOrderer no(c);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> twice(-7, 7), len(1, 5);
  auto random_word = [&](int n) {
    Word w;
    for (int i = 0; i < n; ++i) {
      int t = twice(rng);
      w.push_back(t % 2 ? GeneratorMode::G_twice(t) : GeneratorMode::L(t / 2));
    }
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    int total = len(rng);
    std::uniform_int_distribution<int> split(0, total);
    int i = split(rng);
    int j = std::uniform_int_distribution<int>(i, total)(rng);
    Word all = random_word(total);
    EnvelopingElement u(Word(all.begin(), all.begin() + i), 1);
    EnvelopingElement v(Word(all.begin() + i, all.begin() + j), 1);
    EnvelopingElement w(Word(all.begin() + j, all.end()), 1);
    EnvelopingElement left = no.multiply(u, no.multiply(v, w));
    EnvelopingElement right = no.multiply(no.multiply(u, v), w);
    ASSERT_EQ(left, right) << to_string(all);
    ASSERT_EQ(no.normal_order(left), left);
  }
}
