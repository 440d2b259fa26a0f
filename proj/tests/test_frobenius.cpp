#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsmm/frobenius.hpp"
#include "nsmm/minimal_models.hpp"

using namespace nsmm;

namespace {

URatFunc z(int e = 1, const Rational& c = 1) { return URatFunc::power(e, c); }

// z(1-z) f'' + (c - (a+b+1) z) f' - ab f = 0
RegularSingularSystem hypergeometric(const Rational& a, const Rational& b, const Rational& c) {
  OdeSystem s{{"f"},
              {{{{0, 2}, z(1) - z(2)}, {{0, 1}, URatFunc(c) - z(1, a + b + 1)}, {{0, 0}, URatFunc(-a * b)}}},
              true};
  return companion_form(s);
}

Rational pochhammer(const Rational& a, int k) {
  Rational p = 1;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

RegularSingularSystem constant_system(const RatMatrix& m) {
  RegularSingularSystem s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.labels.push_back("y" + std::to_string(i));
    s.a.emplace_back();
    for (const auto& x : m[i]) s.a.back().emplace_back(x);
  }
  return s;
}

const CorrelatorSpec kSpec = CorrelatorSpec::reference_case();

RegularSingularSystem reference_pair(std::vector<Component> pairing) {
  Module m(kSpec.c, kSpec.h3);
  auto sys = derive_system(m.singular_vectors(2).at(0), 3, kSpec, pairing);
  return companion_form(reduce_to_one_variable(sys, kSpec));
}

std::vector<Rational> exponent_values(const IndicialExponents& ex) {
  std::vector<Rational> out;
  for (const auto& [r, m] : ex.roots)
    for (int i = 0; i < m; ++i) out.push_back(r);
  return out;
}

Rational mod1(Rational q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(f);
}

}  // namespace

TEST(Indicial, Diagonal) {
  const Rational s = frac(2, 3);
  auto ex = indicial_exponents(constant_system({{s, 0}, {0, -s}}));
  EXPECT_EQ(exponent_values(ex), (std::vector<Rational>{-s, s}));
  EXPECT_TRUE(ex.complete);
}

TEST(Indicial, EulerEquation) {
  const Rational s = frac(5, 3);
  OdeSystem euler{{"f"}, {{{{0, 2}, z(2)}, {{0, 1}, z(1)}, {{0, 0}, URatFunc(-s * s)}}}, true};
  EXPECT_EQ(exponent_values(indicial_exponents(companion_form(euler))), (std::vector<Rational>{-s, s}));
}

TEST(Indicial, Hypergeometric) {
  auto ex = indicial_exponents(hypergeometric(frac(1, 3), frac(2, 5), frac(3, 7)));
  EXPECT_EQ(exponent_values(ex), (std::vector<Rational>{0, frac(4, 7)}));
}

TEST(Indicial, IrrationalExponentsReported) {
  auto ex = indicial_exponents(constant_system({{0, 1}, {2, 0}}));
  EXPECT_FALSE(ex.complete);
  EXPECT_TRUE(ex.roots.empty());
  EXPECT_EQ(ex.remainder, UPoly(RatVector{Rational(-2), Rational(0), Rational(1)}));
}

TEST(Series, Geometric) {
  // f' = f/(1-z): theta f = z/(1-z) f
  RegularSingularSystem s{{"f"}, {{URatFunc(UPoly(RatVector{Rational(0), Rational(1)}), UPoly(RatVector{Rational(1), Rational(-1)}))}}};
  auto sol = series_solution(s, 0, 30);
  ASSERT_EQ(sol.order(), 30u);
  for (const auto& c : sol.coefficients) EXPECT_EQ(c[0], Rational(1));
  EXPECT_EQ(residual(sol, s), Rational(0));
  auto ev = evaluate(sol, frac(1, 2));
  EXPECT_LE(std::abs(ev.value[0] - 2.0), ev.tail_bound + 1e-15);
  EXPECT_LT(ev.tail_bound, 1e-6);
  EXPECT_THROW(evaluate(sol, Rational(1)), OutOfDisc);
  EXPECT_THROW(evaluate(sol, -1.5), OutOfDisc);
}

TEST(Series, HypergeometricPochhammer) {
  const Rational a = frac(1, 3), b = frac(2, 5), c = frac(3, 7);
  auto s = hypergeometric(a, b, c);
  auto sol = series_solution(s, 0, 30);
  Rational kfact = 1;
  for (int k = 0; k < 30; ++k) {
    if (k) kfact *= k;
    EXPECT_EQ(sol.coefficients[k][0], pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * kfact)) << k;
  }
  EXPECT_EQ(residual(sol, s), Rational(0));
  // the second exponent 1 - c is not resonant either
  EXPECT_EQ(residual(series_solution(s, frac(4, 7), 30), s), Rational(0));
}

TEST(Series, LogarithmOracle) {
  // 2F1(1,1;2;z) = -log(1-z)/z
  auto s = hypergeometric(1, 1, 2);
  auto sol = series_solution(s, 0, 40);
  auto ev = evaluate(sol, 0.5);
  EXPECT_LE(std::abs(ev.value[0].real() - 2 * std::log(2.0)), ev.tail_bound + 1e-14);
  EXPECT_LT(ev.tail_bound, 1e-9);
}

TEST(Series, ConstantSolution) {
  auto s = constant_system({{0}});
  auto sol = series_solution(s, 0, 5);
  EXPECT_EQ(sol.coefficients[0], RatVector{Rational(1)});
  for (std::size_t k = 1; k < 5; ++k) EXPECT_EQ(sol.coefficients[k], RatVector{Rational(0)});
  EXPECT_EQ(evaluate(sol, 0.0).value[0], std::complex<double>(1.0));
}

TEST(Series, ValueAtZero) {
  auto s = constant_system({{frac(1, 2)}});
  EXPECT_EQ(evaluate(series_solution(s, frac(1, 2), 4), 0.0).value[0], std::complex<double>(0.0));
}

TEST(Series, PerturbedCoefficientHasResidual) {
  auto s = hypergeometric(frac(1, 3), frac(2, 5), frac(3, 7));
  auto sol = series_solution(s, 0, 12);
  sol.coefficients[5][0] += 1;
  EXPECT_GT(residual(sol, s), Rational(0));
}

TEST(Series, Resonance) {
  // c = -1: exponents 0 and 2 differ by an integer
  auto s = hypergeometric(frac(1, 3), frac(2, 5), -1);
  EXPECT_THROW(series_solution(s, 0, 10), ResonanceError);
  EXPECT_THROW(series_solution(s, frac(1, 3), 10), InvalidArgument);
}

TEST(Series, SimilarityInvariance) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  const RegularSingularSystem base = reference_pair({{0, 0}, {1, 1}});
  const auto reference = exponent_values(indicial_exponents(base));
  for (int trial = 0; trial < 5; ++trial) {
    // unimodular: product of elementary matrices
    RatMatrix p = identity_matrix(4);
    for (int step = 0; step < 6; ++step) {
      const std::size_t i = static_cast<std::size_t>(step % 4), j = static_cast<std::size_t>((step + 1 + trial) % 4);
      if (i == j) continue;
      const int f = d(rng);
      for (std::size_t c = 0; c < 4; ++c) p[i][c] += f * p[j][c];
    }
    const RatMatrix pinv = *inverse(p);
    RegularSingularSystem t = base;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        URatFunc s;
        for (std::size_t k = 0; k < 4; ++k)
          for (std::size_t l = 0; l < 4; ++l)
            if (p[i][k] != 0 && pinv[l][j] != 0) s += URatFunc(p[i][k] * pinv[l][j]) * base.a[k][l];
        t.a[i][j] = s;
      }
    EXPECT_EQ(exponent_values(indicial_exponents(t)), reference);
  }
}

TEST(Series, ReferenceSystemsExactResidual) {
  for (auto pairing : {std::vector<Component>{{0, 0}, {1, 1}}, std::vector<Component>{{1, 0}, {0, 1}}}) {
    const auto s = reference_pair(pairing);
    const auto ex = indicial_exponents(s);
    ASSERT_TRUE(ex.complete);
    EXPECT_EQ(ex.roots.size(), 4u);
    for (const auto& [rho, m] : ex.roots) {
      auto sol = series_solution(s, rho, 40);
      EXPECT_EQ(residual(sol, s), Rational(0)) << to_string(rho);
      // coefficient growth supports convergence on |z| <= 0.9
      EXPECT_LT(growth_ratio(sol) * 0.9, 1.0) << to_string(rho);
    }
  }
}

TEST(Series, ExponentsMatchFusionChannels) {
  // R ~ z^{2 h5 - 2(h2 + h3) - 2 t2} (mod integers) in the channel h5.
  const std::vector<Rational> channels{frac(2, 7), frac(-1, 14)};
  for (auto pairing : {std::vector<Component>{{0, 0}, {1, 1}}, std::vector<Component>{{1, 0}, {0, 1}}}) {
    const auto values = exponent_values(indicial_exponents(reference_pair(pairing)));
    for (const auto& h5 : channels) {
      const Rational want = mod1(2 * h5 - 2 * (kSpec.h2 + kSpec.h3) - 2 * kSpec.t2);
      bool found = false;
      for (const auto& r : values) found = found || mod1(r) == want;
      EXPECT_TRUE(found) << to_string(h5);
    }
  }
}
