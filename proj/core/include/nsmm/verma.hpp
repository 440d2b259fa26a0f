#pragma once

// Verma modules M(c,h) over the Neveu-Schwarz algebra and their quotients.
//
// A vector is an EnvelopingElement whose words lie in U(ns^-) in PBW order;
// the word w stands for w applied to the highest-weight vector 1_{c,h}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nsmm/algebra.hpp"
#include "nsmm/linalg.hpp"

namespace nsmm {

using VermaVector = EnvelopingElement;

class SubmoduleSlices;

/// Order used for leading terms: compares the multisets of modes with
/// L(-1) smallest, then G(-1/2), then the remaining modes by weight.
/// L(-1)^n (or L(-1)^n G(-1/2)) is the smallest word of its level.
struct LeadingLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// All PBW words over ns^- of the given level, sorted by LeadingLess.
std::vector<Word> pbw_words(const Rational& level);

/// Coefficient of q^level in prod_{n>=1} (1 + q^{n-1/2}) / (1 - q^n).
long graded_dimension(const Rational& level);

/// Level of a homogeneous vector (0 for the zero vector).
Rational vector_level(const VermaVector& v);

/// Scales to integer coefficients with gcd 1 and a positive coefficient on
/// the LeadingLess-smallest word.
VermaVector normalize_vector(const VermaVector& v);

class Module {
 public:
  /// M(c,h) when `quotient_generators` is empty, else M(c,h) modulo the
  /// submodule they generate. Generators are vectors of M(c,h).
  Module(Rational c, Rational h, std::vector<VermaVector> quotient_generators = {});
  ~Module();
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }
  bool is_quotient() const { return !generators_.empty(); }
  const std::vector<VermaVector>& quotient_generators() const { return generators_; }
  NormalOrderer& orderer() { return orderer_; }

  /// Verma words of the level (full module) or the complement words of the
  /// quotient, sorted by LeadingLess.
  std::vector<Word> level_basis(const Rational& level);

  /// Action in M(c,h), followed by reduction into the complement.
  VermaVector act(const GeneratorMode& g, const VermaVector& v);
  VermaVector act(const EnvelopingElement& e, const VermaVector& v);

  /// Action in the free Verma module M(c,h), no quotient reduction.
  VermaVector verma_act(const GeneratorMode& g, const VermaVector& v);
  VermaVector verma_act(const GeneratorMode& g, const Word& w);

  /// Representative of v in the complement (identity for the full module).
  VermaVector reduce(const VermaVector& v);

  /// Basis of the vectors at `level` annihilated by G(1/2) and G(3/2),
  /// normalized with normalize_vector.
  std::vector<VermaVector> singular_vectors(const Rational& level);

  /// Levels in (0, max_level] with a nonzero singular space.
  std::vector<std::pair<Rational, std::vector<VermaVector>>> scan_singular(const Rational& max_level = 8);

 private:
  struct LevelQuotient {
    std::vector<Word> verma_words;
    std::map<Word, std::size_t, WordLess> index;
    RowEchelon submodule;
    std::vector<Word> complement;
  };

  const LevelQuotient& quotient_level(const Rational& level);
  VermaVector compute_act(const GeneratorMode& g, const Word& w);

  Rational c_;
  Rational h_;
  std::vector<VermaVector> generators_;
  NormalOrderer orderer_;

  struct ActKey {
    GeneratorMode g;
    Word w;
    bool operator==(const ActKey&) const = default;
  };
  struct ActKeyHash {
    std::size_t operator()(const ActKey& k) const noexcept {
      return WordHash{}(k.w) * 31u + static_cast<std::size_t>(k.g.twice_index() * 4 + static_cast<int>(k.g.kind()));
    }
  };

  std::mutex mutex_;
  std::mutex slice_mutex_;
  std::unique_ptr<SubmoduleSlices> slices_;
  std::unordered_map<ActKey, VermaVector, ActKeyHash> act_cache_;
  std::map<Rational, LevelQuotient> quotient_cache_;
};

/// Coordinates of a homogeneous vector in a given word basis.
RatVector coordinates(const VermaVector& v, const std::vector<Word>& basis);
VermaVector from_coordinates(const RatVector& x, const std::vector<Word>& basis);

/// Slices of the submodule of M(c,h) generated by `generators`, level by
/// level. Closes the generators under G(1/2), G(3/2) and then builds
/// each slice from lower ones with G(-1/2), G(-3/2), which generate ns^-.
class SubmoduleSlices {
 public:
  SubmoduleSlices(Module& verma, std::vector<VermaVector> generators);

  /// Basis of the slice at `level` (reduced row echelon in LeadingLess order).
  std::vector<VermaVector> basis(const Rational& level);
  const RowEchelon& echelon(const Rational& level);

 private:
  void close_upwards();

  Module& verma_;
  std::vector<VermaVector> generators_;
  std::map<Rational, RowEchelon> closure_;
  std::map<Rational, RowEchelon> slices_;
};

/// One-shot helper for a single slice.
std::vector<VermaVector> submodule_level(Module& verma, const std::vector<VermaVector>& generators,
                                         const Rational& level);

/// Fixture text: header `c=<r> h=<r> level=<r>` and one vector per line.
std::string format_fixture(const Rational& c, const Rational& h, const Rational& level,
                           const std::vector<VermaVector>& vectors);

}  // namespace nsmm
