#include <gtest/gtest.h>

#include "nsmm/null_ode.hpp"

using namespace nsmm;

namespace {

const CorrelatorSpec kSpec = CorrelatorSpec::reference_case();

RatFunc2 mono(int a, int b, const Rational& c = 1) { return RatFunc2::monomial(a, b, c); }
DiffTerm T(int k, int l, int i = 0, int j = 0) { return {{k, l}, i, j}; }

DiffExpr scaled(const DiffExpr& e, const Rational& s) {
  DiffExpr out;
  add_to(out, e, RatFunc2(s));
  return out;
}

// c * (d1 + d2)^2 + c' (d1/z1 + d2/z2) on Q_{kl}
void add_principal(DiffExpr& e, Component q, const Rational& c2, const Rational& c1) {
  add_to(e, {{T(q.k, q.l, 2, 0), RatFunc2(c2)}, {T(q.k, q.l, 1, 1), RatFunc2(2 * c2)}, {T(q.k, q.l, 0, 2), RatFunc2(c2)}});
  add_to(e, {{T(q.k, q.l, 1, 0), mono(-1, 0, c1)}, {T(q.k, q.l, 0, 1), mono(0, -1, c1)}});
}

VermaVector level2_null() {
  Module m(kSpec.c, kSpec.h3);
  return m.singular_vectors(2).at(0);
}

// Direct substitution oracle: applies the two-variable expression to
// Q_u = z1^{t1-k/2-n} z2^{t2-l/2+n} (i.e. R_u = z^{2n}), sets z1 = 1, z2 = z^2
// and divides by z^{2 t2}.
URatFunc substitute(const DiffExpr& e, Component u, int n, const CorrelatorSpec& spec) {
  URatFunc out;
  for (const auto& [t, f] : e) {
    if (t.q != u) continue;
    const Rational a = spec.t1 - frac(u.k, 2) - n, b = spec.t2 - frac(u.l, 2) + n;
    Rational fall = 1;
    for (int m = 0; m < t.i; ++m) fall *= a - m;
    for (int m = 0; m < t.j; ++m) fall *= b - m;
    for (const auto& [mono, c] : f.numerator().terms()) {
      URatFunc term = URatFunc::power(2 * mono.second + 2 * n - 2 * t.j - u.l, c * fall);
      for (int p = 0; p < f.pole_order(); ++p) term = term / URatFunc(UPoly(RatVector{Rational(1), Rational(0), Rational(-1)}), UPoly(RatVector{Rational(1)}));
      out += term;
    }
  }
  return out;
}

URatFunc theta_apply(const OdeSystem& sys, std::size_t eq, std::size_t u, int n) {
  URatFunc out;
  for (const auto& [key, f] : sys.equations[eq]) {
    if (key.first != u) continue;
    out += f * URatFunc::power(2 * n, pow(Rational(2 * n), key.second));
  }
  return out;
}

}  // namespace

TEST(Correlator, LowestWeightComponents) {
  CorrelatorEngine eng(kSpec);
  const VermaVector one(Word{}, 1), g(Word{GeneratorMode::G_twice(-1)}, 1);
  EXPECT_EQ(eng.correlator(one, one, one), (DiffExpr{{T(0, 0), RatFunc2(1)}}));
  EXPECT_EQ(eng.correlator(g, g, one), (DiffExpr{{T(1, 1), RatFunc2(1)}}));
  // L(-1) is translation in the first two slots
  const VermaVector l1(Word{GeneratorMode::L(-1)}, 1);
  EXPECT_EQ(eng.correlator(l1, one, one), (DiffExpr{{T(0, 0, 1, 0), RatFunc2(1)}}));
  EXPECT_EQ(eng.correlator(one, l1, one), (DiffExpr{{T(0, 0, 0, 1), RatFunc2(1)}}));
  EXPECT_EQ(eng.correlator(one, one, l1), (DiffExpr{{T(0, 0, 1, 0), RatFunc2(-1)}, {T(0, 0, 0, 1), RatFunc2(-1)}}));
}

TEST(Correlator, WardIdentityForL2) {
  // <(L(-2)w1)(z1) w2(z2) w3(0)> = sum_j [h_j/(z_j - z1)^2 - d_j/(z_j - z1)] with d_3 = -(d1 + d2).
  CorrelatorEngine eng(kSpec);
  const VermaVector one(Word{}, 1), l2(Word{GeneratorMode::L(-2)}, 1);
  DiffExpr expected{
      {T(0, 0, 0, 1), RatFunc2::diff_power(-1)},
      {T(0, 0), RatFunc2::diff_power(-2, kSpec.h2) + mono(-2, 0, kSpec.h3)},
      {T(0, 0, 1, 0), mono(-1, 0, -1)},
  };
  add_to(expected, {{T(0, 0, 0, 1), mono(-1, 0, -1)}});
  EXPECT_EQ(eng.correlator(l2, one, one), expected);

  DiffExpr slot2{
      {T(0, 0, 1, 0), RatFunc2::diff_power(-1, -1) + mono(0, -1, -1)},
      {T(0, 0, 0, 1), mono(0, -1, -1)},
      {T(0, 0), RatFunc2::diff_power(-2, kSpec.h1) + mono(0, -2, kSpec.h3)},
  };
  EXPECT_EQ(eng.correlator(one, l2, one), slot2);
}

TEST(Correlator, FermionicZeroModesAreConsistent) {
  // Reaching Q10, Q01, Q11 through the general reduction formulas.
  CorrelatorEngine eng(kSpec);
  const VermaVector one(Word{}, 1), g(Word{GeneratorMode::G_twice(-1)}, 1);
  // G(-1/2) on w3: -Q10 - Q01
  EXPECT_EQ(eng.correlator(one, one, g), (DiffExpr{{T(1, 0), RatFunc2(-1)}, {T(0, 1), RatFunc2(-1)}}));
  // Q11 + d2 Q00 and d1 Q00 - Q11
  EXPECT_EQ(eng.correlator(one, g, g), (DiffExpr{{T(1, 1), RatFunc2(1)}, {T(0, 0, 0, 1), RatFunc2(1)}}));
  EXPECT_EQ(eng.correlator(g, one, g), (DiffExpr{{T(1, 1), RatFunc2(-1)}, {T(0, 0, 1, 0), RatFunc2(1)}}));
}

TEST(ModeTransport, Examples) {
  // L(-2) at slot 2: z2^{-1} d2 - z2^{-2} (h2 + l/2)
  auto tr = mode_transport(GeneratorMode::L(-2), 2, kSpec);
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l) {
      DiffExpr expected{{T(k, l, 0, 1), mono(0, -1)}, {T(k, l), mono(0, -2, -(kSpec.h2 + frac(l, 2)))}};
      EXPECT_EQ(tr.at({k, l}), expected);
    }
  // G(-1/2) at slot 2 maps Q00 to Q01
  auto g = mode_transport(GeneratorMode::G_twice(-1), 2, kSpec);
  EXPECT_EQ(g.at({0, 0}), (DiffExpr{{T(0, 1), RatFunc2(1)}}));
  // L(0) at slot 3 is the weight of w3
  auto l0 = mode_transport(GeneratorMode::L(0), 3, kSpec);
  for (const auto& [q, e] : l0) EXPECT_EQ(e, (DiffExpr{{T(q.k, q.l), RatFunc2(kSpec.h3)}}));
  EXPECT_THROW(mode_transport(GeneratorMode::L(-1), 4, kSpec), UnsupportedSlot);
}

TEST(ModeTransport, NegativeModesDecouple) {
  // Sum over the three slots is <w4', X Y1 Y2 w3> = 0.
  for (const auto& x : {GeneratorMode::L(-1), GeneratorMode::L(-2), GeneratorMode::L(-3), GeneratorMode::G_twice(-1),
                        GeneratorMode::G_twice(-3), GeneratorMode::G_twice(-5)}) {
    std::map<Component, DiffExpr> total;
    for (int slot = 1; slot <= 3; ++slot)
      for (const auto& [q, e] : mode_transport(x, slot, kSpec)) add_to(total[q], e);
    for (const auto& [q, e] : total) EXPECT_TRUE(e.empty()) << x << " " << q.name() << ": " << to_string(e);
  }
}

TEST(ModeTransport, ScalingRelation) {
  // The L(0) insertions sum to h4; with the ansatz exponents the relation
  // sum - h4 annihilates every component.
  std::map<Component, DiffExpr> total;
  for (int slot = 1; slot <= 3; ++slot)
    for (const auto& [q, e] : mode_transport(GeneratorMode::L(0), slot, kSpec)) add_to(total[q], e);
  for (auto& [q, e] : total) {
    add_to(e, {{T(q.k, q.l), RatFunc2(-kSpec.h4)}});
    DiffExpr expected{{T(q.k, q.l, 1, 0), mono(1, 0)}, {T(q.k, q.l, 0, 1), mono(0, 1)},
                      {T(q.k, q.l), RatFunc2(kSpec.h1 + kSpec.h2 + kSpec.h3 - kSpec.h4 + frac(q.k + q.l, 2))}};
    EXPECT_EQ(e, expected);
    DiffOpSystem one{{q}, {q}, {e}};
    OdeSystem r = reduce_to_one_variable(one, kSpec);
    EXPECT_TRUE(r.equations[0].empty()) << q.name();
  }
}

TEST(DeriveSystem, Q00Q11MatchesReferenceEquations) {
  const VermaVector n = level2_null();
  auto sys = derive_system(n, 3, kSpec, {{0, 0}, {1, 1}});
  ASSERT_EQ(sys.equations.size(), 2u);
  // Reference first equation; our null vector is its negative.
  DiffExpr first{{T(0, 0), mono(-2, 0, frac(-8, 14)) + mono(0, -2, frac(-8, 14))},
                 {T(1, 1), mono(-1, 0, 21) + mono(0, -1, -21)}};
  add_principal(first, {0, 0}, -21, -29);
  EXPECT_EQ(sys.equations[0], scaled(first, -1));
  // Reference second equation with its Q00 coupling multiplied by 21.
  DiffExpr second{{T(1, 1), mono(-2, 0, frac(3, 7)) + mono(0, -2, frac(3, 7))},
                  {T(0, 0, 1, 1), mono(0, -1, 21) + mono(-1, 0, -21)},
                  {T(0, 0, 1, 0), mono(0, -2, 3)},
                  {T(0, 0, 0, 1), mono(-2, 0, -3)}};
  add_principal(second, {1, 1}, -21, -29);
  EXPECT_EQ(sys.equations[1], scaled(second, -1));
}

TEST(DeriveSystem, Q10Q01MatchesReferenceEquations) {
  auto sys = derive_system(level2_null(), 3, kSpec, {{1, 0}, {0, 1}});
  DiffExpr first{{T(1, 0), mono(-2, 0, frac(3, 7)) + mono(0, -2, frac(-4, 7))},
                 {T(0, 1, 1, 0), mono(0, -1, 21) + mono(-1, 0, -21)},
                 {T(0, 1), mono(-2, 0, -3)}};
  add_principal(first, {1, 0}, -21, -29);
  EXPECT_EQ(sys.equations[0], scaled(first, -1));
  DiffExpr second{{T(0, 1), mono(0, -2, frac(3, 7)) + mono(-2, 0, frac(-4, 7))},
                  {T(1, 0, 0, 1), mono(-1, 0, 21) + mono(0, -1, -21)},
                  {T(1, 0), mono(0, -2, -3)}};
  add_principal(second, {0, 1}, -21, -29);
  EXPECT_EQ(sys.equations[1], scaled(second, -1));
}

TEST(DeriveSystem, LeadingSymbolAndPoles) {
  const VermaVector n = level2_null();
  const Rational lead = n.coefficient(Word{GeneratorMode::L(-1), GeneratorMode::L(-1)});
  for (auto pairing : {std::vector<Component>{{0, 0}, {1, 1}}, std::vector<Component>{{1, 0}, {0, 1}}}) {
    auto sys = derive_system(n, 3, kSpec, pairing);
    for (std::size_t r = 0; r < 2; ++r) {
      const Component q = pairing[r];
      EXPECT_EQ(sys.equations[r].at(T(q.k, q.l, 2, 0)), RatFunc2(lead));
      EXPECT_EQ(sys.equations[r].at(T(q.k, q.l, 1, 1)), RatFunc2(2 * lead));
      EXPECT_EQ(sys.equations[r].at(T(q.k, q.l, 0, 2)), RatFunc2(lead));
      for (const auto& [t, f] : sys.equations[r]) EXPECT_LE(t.i + t.j, 2);
    }
  }
}

TEST(DeriveSystem, Errors) {
  const VermaVector n = level2_null();
  EXPECT_THROW(derive_system(n, 3, kSpec, {{0, 0}, {0, 1}}), ParityMismatch);
  EXPECT_THROW(derive_system(n, 3, kSpec, {{0, 0}}), ParityMismatch);
  EXPECT_THROW(derive_system(n, 0, kSpec, {{0, 0}, {1, 1}}), UnsupportedSlot);
}

TEST(DeriveSystem, VacuumNullVector) {
  CorrelatorSpec spec{kSpec.c, frac(2, 7), frac(2, 7), 0, frac(2, 7), 0, 0};
  const VermaVector g(Word{GeneratorMode::G_twice(-1)}, 1);
  auto sys = derive_system(g, 3, spec, {{0, 0}, {1, 1}});
  EXPECT_EQ(sys.equations[0], (DiffExpr{{T(1, 1), RatFunc2(1)}, {T(0, 0, 0, 1), RatFunc2(1)}}));
  EXPECT_EQ(sys.equations[1], (DiffExpr{{T(1, 1), RatFunc2(-1)}, {T(0, 0, 1, 0), RatFunc2(1)}}));
}

TEST(DeriveSystem, NullAtOtherSlots) {
  // The level-2 null vector of M(c, -1/14) at slot 1 and slot 2 gives
  // systems with poles only on z1 z2 (z1 - z2) = 0 and the same leading symbol.
  Module m(kSpec.c, kSpec.h1);
  auto nulls = m.singular_vectors(frac(3, 2));
  ASSERT_EQ(nulls.size(), 1u);
  for (int slot : {1, 2}) {
    auto sys = derive_system(nulls[0], slot, kSpec, {{1, 0}, {0, 1}});
    EXPECT_EQ(sys.equations.size(), 2u);
    for (const auto& e : sys.equations) EXPECT_FALSE(e.empty());
  }
}

TEST(ReduceToOneVariable, ResubstitutionOracle) {
  const VermaVector n = level2_null();
  for (auto pairing : {std::vector<Component>{{0, 0}, {1, 1}}, std::vector<Component>{{1, 0}, {0, 1}}}) {
    auto sys = derive_system(n, 3, kSpec, pairing);
    OdeSystem ode = reduce_to_one_variable(sys, kSpec);
    for (std::size_t e = 0; e < sys.equations.size(); ++e)
      for (std::size_t u = 0; u < pairing.size(); ++u)
        for (int k = -2; k <= 3; ++k)
          EXPECT_EQ(theta_apply(ode, e, u, k), substitute(sys.equations[e], pairing[u], k, kSpec));
  }
}

TEST(ReduceToOneVariable, InhomogeneousInput) {
  DiffOpSystem bad{{{0, 0}}, {{0, 0}}, {DiffExpr{{T(0, 0), RatFunc2(1) + mono(1, 0)}}}};
  EXPECT_THROW(reduce_to_one_variable(bad, kSpec), InhomogeneityError);
  DiffOpSystem zero{{{0, 0}}, {{0, 0}}, {DiffExpr{}}};
  EXPECT_TRUE(reduce_to_one_variable(zero, kSpec).equations[0].empty());
}

TEST(CompanionForm, Euler) {
  // z^2 f'' + z f' - s^2 f = 0
  const Rational s = frac(3, 2);
  OdeSystem euler{{"f"}, {{{{0, 2}, URatFunc::power(2)}, {{0, 1}, URatFunc::power(1)}, {{0, 0}, URatFunc(-s * s)}}}, true};
  auto rs = companion_form(euler);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs.a[0][1], URatFunc(1));
  EXPECT_EQ(rs.a[1][0], URatFunc(s * s));
  EXPECT_TRUE(rs.a[0][0].is_zero());
  EXPECT_TRUE(rs.a[1][1].is_zero());
}

TEST(CompanionForm, FirstOrderUnchanged) {
  // theta Y = A Y written as theta Y_i - sum A_ij Y_j = 0
  const URatFunc a = URatFunc::power(1, 3) + URatFunc(1), b = URatFunc(frac(1, 2));
  OdeSystem sys{{"y1", "y2"},
                {{{{0, 1}, URatFunc(1)}, {{0, 0}, -a}, {{1, 0}, -b}}, {{{1, 1}, URatFunc(1)}, {{0, 0}, -b}}},
                false};
  auto rs = companion_form(sys);
  EXPECT_EQ(rs.a, (std::vector<std::vector<URatFunc>>{{a, b}, {b, URatFunc()}}));
}

TEST(CompanionForm, IrregularSingularity) {
  // f' = f / z^3, i.e. theta f = f / z^2
  OdeSystem sys{{"f"}, {{{{0, 1}, URatFunc(1)}, {{0, 0}, -URatFunc::power(-3)}}}, true};
  EXPECT_THROW(companion_form(sys), IrregularSingularity);
}

TEST(CompanionForm, ReferencePairsAreRegularSingular) {
  const VermaVector n = level2_null();
  for (auto pairing : {std::vector<Component>{{0, 0}, {1, 1}}, std::vector<Component>{{1, 0}, {0, 1}}}) {
    auto rs = companion_form(reduce_to_one_variable(derive_system(n, 3, kSpec, pairing), kSpec));
    EXPECT_EQ(rs.size(), 4u);
  }
}

TEST(ReferenceDiff, ReportsEveryTerm) {
  const VermaVector n = level2_null();
  auto derived = reduce_to_one_variable(derive_system(n, 3, kSpec, {{0, 0}, {1, 1}}), kSpec);
  auto d = diff_systems(reference_system("Q00,Q11"), derived);
  ASSERT_FALSE(d.empty());
  // The coupling 4/(z(1 - z^2)) R11 agrees exactly.
  bool coupling = false;
  for (const auto& e : d)
    if (e.equation == "R00''" && e.term == "R11") coupling = e.match;
  EXPECT_TRUE(coupling);

  auto derived2 = reduce_to_one_variable(derive_system(n, 3, kSpec, {{1, 0}, {0, 1}}), kSpec);
  int matches = 0;
  for (const auto& e : diff_systems(reference_system("Q10,Q01"), derived2)) matches += e.match;
  EXPECT_GE(matches, 3);
  EXPECT_THROW(reference_system("Q00,Q01"), InvalidArgument);
}

TEST(OdeForms, ThetaDerivativeRoundTrip) {
  OdeSystem sys{{"f"}, {{{{0, 3}, URatFunc(2)}, {{0, 1}, URatFunc::power(1)}, {{0, 0}, URatFunc(5)}}}, false};
  EXPECT_EQ(to_theta_form(to_derivative_form(sys)).equations, sys.equations);
  // theta^2 z^3 = 9 z^3 in both forms
  const URatFunc z3 = URatFunc::power(3);
  OdeSystem t2{{"f"}, {{{{0, 2}, URatFunc(1)}}}, false};
  EXPECT_EQ(apply(t2, {z3}).at(0), URatFunc::power(3, 9));
  EXPECT_EQ(apply(to_derivative_form(t2), {z3}).at(0), URatFunc::power(3, 9));
}
