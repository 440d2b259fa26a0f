#pragma once

// Differential equations for four-point correlators
//   Q_{k,l}(z1, z2) = <w4', Y1(G(-1/2)^k w1, z1) Y2(G(-1/2)^l w2, z2) w3>
// with lowest-weight states w1..w4' of weights h1..h4, obtained by inserting
// a singular vector at one slot and moving its modes out of the correlator.

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "nsmm/ratfunc.hpp"
#include "nsmm/verma.hpp"

namespace nsmm {

/// Q_{k,l}; k, l in {0, 1}.
struct Component {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Component&, const Component&) = default;
  std::string name() const { return "Q" + std::to_string(k) + std::to_string(l); }
};

/// Parses "Q00", "Q01", "Q10", "Q11" (also "R.." or bare "01").
Component parse_component(const std::string& text);

struct CorrelatorSpec {
  Rational c;
  Rational h1, h2, h3, h4;
  /// Exponents of the one-variable ansatz
  /// Q_{k,l} = z1^{t1-k/2} z2^{t2-l/2} R_{k,l}((z2/z1)^{1/2}).
  Rational t1, t2;

  /// c = -11/14, weights (-1/14, -1/14, 2/7, 2/7), t1 = t2 = 1/14.
  static CorrelatorSpec reference_case();
};

/// d1^i d2^j Q_{k,l}
struct DiffTerm {
  Component q;
  int i = 0;
  int j = 0;
  friend auto operator<=>(const DiffTerm&, const DiffTerm&) = default;
};

/// Linear differential expression in the unknowns Q_{k,l}.
using DiffExpr = std::map<DiffTerm, RatFunc2>;

void add_to(DiffExpr& acc, const DiffExpr& e, const RatFunc2& factor = RatFunc2(1));
DiffExpr diff1(const DiffExpr& e);
DiffExpr diff2(const DiffExpr& e);
std::string to_string(const DiffExpr& e);

/// Evaluates correlators of arbitrary Verma descendants in terms of the Q_{k,l}.
class CorrelatorEngine {
 public:
  explicit CorrelatorEngine(const CorrelatorSpec& spec);

  const CorrelatorSpec& spec() const { return spec_; }
  Module& module(int slot);

  /// <w4', Y1(v1, z1) Y2(v2, z2) v3> for v1 in M(c,h1), v2 in M(c,h2), v3 in M(c,h3).
  DiffExpr correlator(const VermaVector& v1, const VermaVector& v2, const VermaVector& v3);

 private:
  using Key = std::array<Word, 3>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };

  const DiffExpr& words(const Word& w1, const Word& w2, const Word& w3);
  DiffExpr compute(const Word& w1, const Word& w2, const Word& w3);

  CorrelatorSpec spec_;
  Module m1_, m2_, m3_;
  std::recursive_mutex mutex_;
  std::map<Key, DiffExpr, KeyLess> memo_;
};

/// Contribution of one mode inserted at a slot of Q_{k,l}, for each of the four
/// components: at slots 1 and 2 the (signed) commutator [X, Y_slot], at slot 3
/// the action on w3. For a mode of negative index the three contributions sum
/// to zero; for L(0) they sum to h4 Q_{k,l}.
std::map<Component, DiffExpr> mode_transport(const GeneratorMode& mode, int slot, const CorrelatorSpec& spec);

struct DiffOpSystem {
  std::vector<Component> unknowns;
  /// Row r is the relation coming from G(-1/2)^k N at the null slot with
  /// G(-1/2)^l on the first remaining lowest-weight slot; rows[r] holds (k, l).
  std::vector<Component> rows;
  std::vector<DiffExpr> equations;
};

/// Relations satisfied by the components in `pairing` when `null` (a singular
/// vector of the module at `slot`) vanishes. Throws ParityMismatch when the
/// pairing mixes parities or cannot be reached from `null`.
DiffOpSystem derive_system(const VermaVector& null, int slot, const CorrelatorSpec& spec,
                           const std::vector<Component>& pairing);

std::string to_string(const DiffOpSystem& sys);

/// Ordinary linear system in one variable z written with theta = z d/dz:
/// equation e is sum over (unknown u, power p) of coeff * theta^p R_u = 0.
struct OdeSystem {
  std::vector<std::string> unknowns;
  std::vector<std::map<std::pair<std::size_t, int>, URatFunc>> equations;
  /// True when the powers are of d/dz instead of theta.
  bool derivative_form = false;
};

/// Substitutes Q_{k,l} = z1^{t1-k/2} z2^{t2-l/2} R_{k,l}(z), z = (z2/z1)^{1/2},
/// and divides out the common power of z1 and z^{2 t2}. Throws
/// InhomogeneityError when the powers of z1 do not cancel.
OdeSystem reduce_to_one_variable(const DiffOpSystem& sys, const CorrelatorSpec& spec);

/// Switches between theta and d/dz powers.
OdeSystem to_theta_form(const OdeSystem& sys);
OdeSystem to_derivative_form(const OdeSystem& sys);

/// Per unknown: highest order n_u and the expression
/// R_u^{(n_u)} = sum coeff * R_v^{(d)} with d < n_v (powers as in the input form).
struct SolvedSystem {
  std::vector<std::string> unknowns;
  std::vector<int> orders;
  std::vector<std::map<std::pair<std::size_t, int>, URatFunc>> rhs;
};

SolvedSystem solve_leading(const OdeSystem& sys);

/// z Y' = A(z) Y.
struct RegularSingularSystem {
  std::vector<std::string> labels;
  std::vector<std::vector<URatFunc>> a;
  std::size_t size() const { return a.size(); }
};

/// Stacks Y = (R_u, theta R_u, ...) per unknown. Throws IrregularSingularity
/// when A has a pole at 0.
RegularSingularSystem companion_form(const OdeSystem& sys);

/// Applies the d/dz system to the given polynomials R_u and returns the
/// residual of each equation (used by tests and the reference-system diff).
std::vector<URatFunc> apply(const OdeSystem& sys, const std::vector<URatFunc>& r);

/// Reference equations for c = -11/14, in d/dz form
/// with unit coefficient on the leading derivative. `which` is "Q00,Q11"
/// (unknowns R00, R11) or "Q10,Q01" (R10, R01).
OdeSystem reference_system(const std::string& which);

struct DiffEntry {
  std::string equation;  // unknown whose top derivative is solved for
  std::string term;      // e.g. R11'
  URatFunc reference;
  URatFunc derived;
  bool match = false;
  /// derived/reference when that ratio is a constant.
  std::optional<Rational> ratio;
};

/// Compares solved d/dz forms term by term.
std::vector<DiffEntry> diff_systems(const OdeSystem& ref, const OdeSystem& derived);

std::string to_string(const OdeSystem& sys);
std::string to_string(const RegularSingularSystem& sys);

}  // namespace nsmm
