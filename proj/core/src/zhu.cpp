#include "nsmm/zhu.hpp"

#include <map>

namespace nsmm {

BimodulePoly& BimodulePoly::operator+=(const BimodulePoly& o) {
  even += o.even;
  odd += o.odd;
  return *this;
}

BimodulePoly& BimodulePoly::operator*=(const Rational& s) {
  even *= s;
  odd *= s;
  return *this;
}

namespace {

BimodulePoly times(const BimodulePoly& p, const Poly2& f) { return {p.even * f, p.odd * f}; }

}  // namespace

ZhuReducer::ZhuReducer(Module& verma) : verma_(verma) {
  if (verma.is_quotient()) throw InvalidArgument("zhu reduction needs the full Verma module");
}

BimodulePoly ZhuReducer::reduce(const VermaVector& v) {
  BimodulePoly out;
  for (const auto& [w, q] : v.terms()) out += reduce(w) * q;
  return out;
}

BimodulePoly ZhuReducer::reduce(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  BimodulePoly p = compute(w);
  cache_.emplace(w, p);
  return p;
}

BimodulePoly ZhuReducer::compute(const Word& w) {
  if (w.empty()) return {Poly2(1), Poly2()};
  const GeneratorMode head = w.front();
  const Word rest(w.begin() + 1, w.end());
  const int t = head.twice_index();
  if (head.is_fermionic()) {
    if (t == -1) {
      if (!rest.empty()) throw ReductionError("G(-1/2) is not the last factor of " + to_string(w));
      return {Poly2(), Poly2(1)};
    }
    // G(-k-1/2) r = (-1)^k G(-1/2) r modulo O(M).
    const int k = (-t - 1) / 2;
    return reduce(verma_.verma_act(GeneratorMode::G_twice(-1), VermaVector(rest, 1))) * Rational(k % 2 ? -1 : 1);
  }
  const int n = -t / 2;
  if (n == 1) {
    // L(-1) r = x*r - r*y - wt(r) r
    BimodulePoly p = reduce(rest);
    const Rational wt = verma_.h() + level_of(rest);
    return times(p, Poly2::x() - Poly2::y() - Poly2(wt));
  }
  if (n == 2) {
    BimodulePoly p = times(reduce(rest), Poly2::y());
    return p + reduce(verma_.verma_act(GeneratorMode::L(-1), VermaVector(rest, 1))) * Rational(-1);
  }
  if (n >= 3) {
    BimodulePoly a = reduce(verma_.verma_act(GeneratorMode::L(-n + 1), VermaVector(rest, 1))) * Rational(-2);
    BimodulePoly b = reduce(verma_.verma_act(GeneratorMode::L(-n + 2), VermaVector(rest, 1))) * Rational(-1);
    return a + b;
  }
  throw ReductionError("cannot reduce word " + to_string(w));
}

BimodulePoly zhu_reduce(Module& verma, const VermaVector& v) {
  ZhuReducer z(verma);
  return z.reduce(v);
}

namespace {

std::vector<Poly2> primitive_all(const std::vector<Poly2>& g) {
  std::vector<Poly2> out;
  for (const auto& p : g) out.push_back(p.primitive_form());
  return out;
}

std::vector<Poly2> monic_all(const std::vector<Poly2>& g) {
  std::vector<Poly2> out;
  for (const auto& p : g) out.push_back(p.monic());
  return out;
}

// Adds f to the ideal with Groebner basis g; returns true when it grew.
bool absorb(std::vector<Poly2>& g, const Poly2& f) {
  Poly2 r = reduce(f, g);
  if (r.is_zero()) return false;
  g.push_back(r);
  g = groebner_basis(g);
  return true;
}

}  // namespace

std::vector<Poly2> FusionIdeals::even_basis() const { return monic_all(even); }
std::vector<Poly2> FusionIdeals::odd_basis() const { return monic_all(odd); }

FusionIdeals bimodule_ideals(const Rational& c, const Rational& h, const std::vector<VermaVector>& generators,
                             const ZhuOptions& options) {
  FusionIdeals out;
  if (generators.empty()) {
    out.stabilized = true;
    return out;
  }
  Module verma(c, h);
  ZhuReducer zhu(verma);
  SubmoduleSlices slices(verma, generators);
  Rational top = 0;
  for (const auto& g : generators) top = std::max(top, vector_level(g));
  const Rational cutoff = top + options.extra_levels;
  std::vector<Poly2> even, odd;
  int unchanged = 0;
  for (Rational lv = 0; lv <= cutoff; lv += frac(1, 2)) {
    bool grew = false;
    for (const auto& v : slices.basis(lv)) {
      BimodulePoly p = zhu.reduce(v);
      if (!p.even.is_zero()) grew = absorb(even, p.even) || grew;
      if (!p.odd.is_zero()) grew = absorb(odd, p.odd) || grew;
    }
    out.last_level = lv;
    if (lv <= top) continue;
    unchanged = grew ? 0 : unchanged + 1;
    if (unchanged >= options.stable_half_levels) {
      out.stabilized = true;
      break;
    }
  }
  out.even = primitive_all(even);
  out.odd = primitive_all(odd);
  return out;
}

std::vector<VermaVector> maximal_submodule_generators(long p, long q, const ModuleLabel& label) {
  const Rational c = central_charge(p, q);
  const auto [low, high] = singular_levels(label);
  if (label.h == 0) {
    // Vacuum: quotient by G(-1/2)1 first, then take the singular vector of V(c,0).
    VermaVector g(Word{GeneratorMode::G_twice(-1)}, 1);
    Module v(c, 0, {g});
    auto s = v.singular_vectors(high);
    if (s.empty()) throw ComputationError("no singular vector of V(c,0) at level " + to_string(high));
    std::vector<VermaVector> out{g};
    out.insert(out.end(), s.begin(), s.end());
    return out;
  }
  Module m(c, label.h);
  std::vector<VermaVector> out;
  for (const Rational& lv : {low, high}) {
    auto s = m.singular_vectors(lv);
    if (s.empty()) throw ComputationError("no singular vector at level " + to_string(lv));
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

FusionCount fusion_rule(const FusionIdeals& ideals, const Rational& h2, const Rational& h3) {
  auto vanishes = [&](const std::vector<Poly2>& g) {
    for (const auto& p : g)
      if (p.evaluate(h3, h2) != 0) return false;
    return true;
  };
  FusionCount f;
  f.even = vanishes(ideals.even) ? 1 : 0;
  f.odd = vanishes(ideals.odd) ? 1 : 0;
  f.total = f.even + f.odd;
  return f;
}

FusionCount fusion_rule(long p, long q, const Rational& h1, const Rational& h2, const Rational& h3,
                        const ZhuOptions& options) {
  const ModuleLabel l1 = label_for_weight(p, q, h1);
  label_for_weight(p, q, h2);
  label_for_weight(p, q, h3);
  FusionIdeals ideals = bimodule_ideals(central_charge(p, q), h1, maximal_submodule_generators(p, q, l1), options);
  return fusion_rule(ideals, h2, h3);
}

std::vector<FusionRow> fusion_table(long p, long q, const ZhuOptions& options) {
  const auto labels = irreducible_list(p, q);
  const Rational c = central_charge(p, q);
  std::vector<FusionRow> rows;
  for (const auto& l1 : labels) {
    FusionIdeals ideals = bimodule_ideals(c, l1.h, maximal_submodule_generators(p, q, l1), options);
    for (const auto& l2 : labels)
      for (const auto& l3 : labels) rows.push_back({l1.h, l2.h, l3.h, fusion_rule(ideals, l2.h, l3.h)});
  }
  return rows;
}

VacuumZhu zhu_algebra_vacuum(long p, long q, const ZhuOptions& options) {
  const Rational c = central_charge(p, q);
  const ModuleLabel vac = label_for_weight(p, q, 0);
  auto gens = maximal_submodule_generators(p, q, vac);
  FusionIdeals ideals = bimodule_ideals(c, 0, gens, options);
  const auto basis = ideals.even_basis();
  if (!ideal_contains(basis, Poly2::x() - Poly2::y()))
    throw ComputationError("x - y is not in the vacuum ideal; the bimodule is not C[x]");
  UPoly g;
  for (const auto& f : basis) g = gcd(g, UPoly(f.diagonal()));
  VacuumZhu out;
  out.generator = g.monic();
  out.roots = rational_roots(out.generator);
  out.singular_level = singular_levels(vac).second;
  out.singular_vector = gens.back();
  out.stabilized = ideals.stabilized;
  return out;
}

}  // namespace nsmm
