#pragma once

// Frenkel-Zhu bimodule A(M(c,h)) = C[x,y] + C[x,y]v, where x is the left
// action of [omega], y the right action, and v the class of G(-1/2)1.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsmm/minimal_models.hpp"
#include "nsmm/polynomial.hpp"
#include "nsmm/verma.hpp"

namespace nsmm {

struct BimodulePoly {
  Poly2 even;
  Poly2 odd;  // coefficient of v

  BimodulePoly& operator+=(const BimodulePoly& o);
  BimodulePoly& operator*=(const Rational& s);
  friend BimodulePoly operator+(BimodulePoly a, const BimodulePoly& b) { return a += b; }
  friend BimodulePoly operator*(BimodulePoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const BimodulePoly&, const BimodulePoly&) = default;
};

/// Class map M(c,h) -> A(M(c,h)), memoized per word.
class ZhuReducer {
 public:
  /// `verma` must be the full Verma module (no quotient).
  explicit ZhuReducer(Module& verma);

  BimodulePoly reduce(const VermaVector& v);
  BimodulePoly reduce(const Word& w);

 private:
  BimodulePoly compute(const Word& w);

  Module& verma_;
  std::unordered_map<Word, BimodulePoly, WordHash> cache_;
};

BimodulePoly zhu_reduce(Module& verma, const VermaVector& v);

struct ZhuOptions {
  /// Submodule slices are reduced up to (max generator level + extra_levels).
  Rational extra_levels = 4;
  /// Stop early once this many consecutive half-levels past the last
  /// generator leave both Groebner bases unchanged.
  int stable_half_levels = 4;
};

struct FusionIdeals {
  std::vector<Poly2> even;  // reduced Groebner basis, each in primitive form
  std::vector<Poly2> odd;
  bool stabilized = false;
  Rational last_level;  // highest slice that was reduced

  /// Monic reduced Groebner bases, for exact ideal comparison.
  std::vector<Poly2> even_basis() const;
  std::vector<Poly2> odd_basis() const;
};

/// Image in A(M(c,h)) of the submodule generated by `generators`.
FusionIdeals bimodule_ideals(const Rational& c, const Rational& h, const std::vector<VermaVector>& generators,
                             const ZhuOptions& options = {});

/// Generators of the maximal proper submodule of M(c_{p,q}, h) for a
/// minimal-model weight: G(-1/2)1 plus the lifted singular vector of
/// V(c,0) for the vacuum, the two Verma singular spaces otherwise.
std::vector<VermaVector> maximal_submodule_generators(long p, long q, const ModuleLabel& label);

struct FusionCount {
  int even = 0;
  int odd = 0;
  int total = 0;
  friend bool operator==(const FusionCount&, const FusionCount&) = default;
};

/// Evaluates the ideals at (x, y) = (h3, h2).
FusionCount fusion_rule(const FusionIdeals& ideals, const Rational& h2, const Rational& h3);

struct FusionRow {
  Rational h1, h2, h3;
  FusionCount count;
};

/// Every ordered triple of weights of the (p,q) model.
std::vector<FusionRow> fusion_table(long p, long q, const ZhuOptions& options = {});

/// N_{h1,h2}^{h3} in the (p,q) model; throws UnknownWeight.
FusionCount fusion_rule(long p, long q, const Rational& h1, const Rational& h2, const Rational& h3,
                        const ZhuOptions& options = {});

struct VacuumZhu {
  UPoly generator;  // monic
  std::vector<Rational> roots;
  Rational singular_level;
  VermaVector singular_vector;  // in V(c,0), complement representative
  bool stabilized = false;
};

/// A(L(c_{p,q}, 0)) = C[x]/(generator).
VacuumZhu zhu_algebra_vacuum(long p, long q, const ZhuOptions& options = {});

}  // namespace nsmm
