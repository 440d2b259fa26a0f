#include <gtest/gtest.h>

#include <chrono>

#include "nsmm/zhu.hpp"

using namespace nsmm;

namespace {

const Rational kC = frac(-11, 14);
const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

VermaVector V(std::string_view s) { return parse_element(s, kC); }

std::vector<Poly2> gb(std::vector<Poly2> g) { return groebner_basis(std::move(g)); }

// The reference ideals I1 and I2 for (c, h) = (-11/14, 2/7).
std::vector<Poly2> reference_i1() {
  Poly2 d = X - Y, s = X + Y;
  return {-21 * (d * d) + 4 * s + frac(4, 7), d * (49 * (d * d) - 84 * s + 20)};
}

std::vector<Poly2> reference_i2() {
  Poly2 d = X - Y, s = X + Y;
  return {frac(-7, 6) * (d * d) + frac(1, 2) * s + frac(1, 24), frac(-75, 28) + 25 * s - 21 * (d * d)};
}

}  // namespace

TEST(Groebner, Basics) {
  auto g = gb({X * X - Y, X * Y - 1});
  EXPECT_TRUE(ideal_contains(g, Y * Y - X));
  EXPECT_FALSE(ideal_contains(g, X - 1));
  EXPECT_EQ(gb({X - Y, Y - 1}), gb({X - 1, Y - 1}));
  EXPECT_EQ(gb({Poly2(3)}), std::vector<Poly2>{Poly2(1)});
  EXPECT_TRUE(gb({}).empty());
}

TEST(UPoly, RootsAndGcd) {
  UPoly x = UPoly::x();
  UPoly f = x * (x - UPoly(RatVector{frac(2, 7)})) * (x + UPoly(RatVector{frac(1, 14)}));
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{frac(-1, 14), 0, frac(2, 7)}));
  EXPECT_EQ(gcd(f, x * x), x);
  UPoly g = x * x - UPoly(RatVector{Rational(2)});
  EXPECT_TRUE(rational_roots(g).empty());
}

TEST(ZhuReduce, Examples) {
  Module m(kC, frac(2, 7));
  EXPECT_EQ(zhu_reduce(m, V("1")), (BimodulePoly{Poly2(1), Poly2()}));
  EXPECT_EQ(zhu_reduce(m, m.act(V("L(-2) + 2*L(-1) + L(0)"), V("1"))), (BimodulePoly{X, Poly2()}));
  EXPECT_EQ(zhu_reduce(m, V("L(-2) + L(-1)")), (BimodulePoly{Y, Poly2()}));
  EXPECT_EQ(zhu_reduce(m, V("G(-1/2)")), (BimodulePoly{Poly2(), Poly2(1)}));
}

TEST(ZhuReduce, LevelTwoSingularClass) {
  Module m(kC, frac(2, 7));
  auto s = m.singular_vectors(2);
  ASSERT_EQ(s.size(), 1u);
  BimodulePoly p = zhu_reduce(m, s[0]);
  EXPECT_TRUE(p.odd.is_zero());
  EXPECT_EQ(p.even.monic(), reference_i1()[0].monic());
}

TEST(BimoduleIdeals, ReferenceIdeals) {
  Module m(kC, frac(2, 7));
  std::vector<VermaVector> gens = m.singular_vectors(2);
  auto s52 = m.singular_vectors(frac(5, 2));
  gens.insert(gens.end(), s52.begin(), s52.end());
  FusionIdeals ideals = bimodule_ideals(kC, frac(2, 7), gens);
  EXPECT_TRUE(ideals.stabilized);
  EXPECT_EQ(ideals.even_basis(), gb(reference_i1()));
  EXPECT_EQ(ideals.odd_basis(), gb(reference_i2()));
}

TEST(BimoduleIdeals, EmptyGenerators) {
  FusionIdeals ideals = bimodule_ideals(kC, frac(2, 7), {});
  EXPECT_TRUE(ideals.even.empty());
  EXPECT_TRUE(ideals.odd.empty());
}

TEST(Fusion, ReferenceTable) {
  const Rational a = frac(2, 7), b = frac(-1, 14), z = 0;
  EXPECT_EQ(fusion_rule(7, 3, a, a, z), (FusionCount{1, 0, 1}));
  EXPECT_EQ(fusion_rule(7, 3, a, a, b), (FusionCount{0, 1, 1}));
  EXPECT_EQ(fusion_rule(7, 3, a, a, a), (FusionCount{0, 0, 0}));
  EXPECT_EQ(fusion_rule(7, 3, a, b, z).total, 0);
  EXPECT_EQ(fusion_rule(7, 3, a, b, a).total, 1);
  EXPECT_EQ(fusion_rule(7, 3, a, b, b).total, 1);
  EXPECT_THROW(fusion_rule(7, 3, a, frac(1, 3), z), UnknownWeight);
}

TEST(Fusion, TableProperties) {
  auto rows = fusion_table(7, 3);
  ASSERT_EQ(rows.size(), 27u);
  std::map<std::tuple<Rational, Rational, Rational>, int> total;
  for (const auto& r : rows) {
    EXPECT_LE(r.count.total, 2);
    total[{r.h1, r.h2, r.h3}] = r.count.total;
  }
  for (const auto& r : rows) {
    EXPECT_EQ(r.count.total, (total[{r.h2, r.h1, r.h3}])) << r.h1 << " " << r.h2 << " " << r.h3;
    if (r.h1 == 0) EXPECT_EQ(r.count.total, r.h2 == r.h3 ? 1 : 0);
  }
}

TEST(VacuumZhu, SevenThree) {
  VacuumZhu z = zhu_algebra_vacuum(7, 3);
  EXPECT_TRUE(z.stabilized);
  UPoly x = UPoly::x();
  UPoly expected = x * (x - UPoly(RatVector{frac(2, 7)})) * (x + UPoly(RatVector{frac(1, 14)}));
  EXPECT_EQ(divmod(z.generator, expected).second, UPoly());
  std::vector<Rational> weights;
  for (const auto& l : irreducible_list(7, 3)) weights.push_back(l.h);
  EXPECT_EQ(z.roots, weights);
}

TEST(VacuumZhu, FiveThree) {
  VacuumZhu z = zhu_algebra_vacuum(5, 3);
  std::vector<Rational> weights;
  for (const auto& l : irreducible_list(5, 3)) weights.push_back(l.h);
  EXPECT_EQ(z.roots, weights);
}
