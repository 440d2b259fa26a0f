#include "nsmm/verma.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nsmm {

namespace {

int lead_key(const GeneratorMode& g) {
  if (g.kind() == ModeKind::Virasoro && g.twice_index() == -2) return 0;
  if (g.is_fermionic() && g.twice_index() == -1) return 1;
  return -g.twice_index();
}

std::vector<int> sorted_keys(const Word& w) {
  std::vector<int> keys;
  keys.reserve(w.size());
  for (const auto& g : w) keys.push_back(lead_key(g));
  std::sort(keys.begin(), keys.end());
  return keys;
}

int twice_level(const Rational& level) {
  Rational t = level * 2;
  if (!is_integer(t)) throw InvalidArgument("level must lie in (1/2)Z, got " + to_string(level));
  return static_cast<int>(t.get_num().get_si());
}

void enumerate_words(int remaining, int lo, Word& current, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int t = std::max(lo, -remaining); t <= -1; ++t) {
    const bool odd = (t % 2) != 0;
    if (odd && !current.empty() && current.back().twice_index() == t) continue;
    current.push_back(odd ? GeneratorMode::G_twice(t) : GeneratorMode::L(t / 2));
    enumerate_words(remaining + t, t, current, out);
    current.pop_back();
  }
}

}  // namespace

bool LeadingLess::operator()(const Word& a, const Word& b) const {
  Rational la = level_of(a), lb = level_of(b);
  if (la != lb) return la < lb;
  auto ka = sorted_keys(a), kb = sorted_keys(b);
  if (ka != kb) return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  return WordLess{}(a, b);
}

std::vector<Word> pbw_words(const Rational& level) {
  const int t = twice_level(level);
  std::vector<Word> out;
  if (t < 0) return out;
  Word current;
  enumerate_words(t, -t, current, out);
  std::sort(out.begin(), out.end(), LeadingLess{});
  return out;
}

long graded_dimension(const Rational& level) {
  const int t = twice_level(level);
  if (t < 0) return 0;
  // Series in q^{1/2}: index k stands for q^{k/2}.
  std::vector<long> series(static_cast<std::size_t>(t) + 1, 0);
  series[0] = 1;
  for (int odd = 1; odd <= t; odd += 2)
    for (int k = t; k >= odd; --k) series[k] += series[k - odd];
  for (int even = 2; even <= t; even += 2)
    for (int k = even; k <= t; ++k) series[k] += series[k - even];
  return series[static_cast<std::size_t>(t)];
}

Rational vector_level(const VermaVector& v) {
  if (v.is_zero()) return 0;
  return level_of(v.terms().begin()->first);
}

VermaVector normalize_vector(const VermaVector& v) {
  if (v.is_zero()) return v;
  std::vector<Word> words;
  RatVector coeffs;
  for (const auto& [w, q] : v.terms()) {
    words.push_back(w);
    coeffs.push_back(q);
  }
  IntVector ints = primitive(coeffs);
  std::size_t lead = 0;
  for (std::size_t i = 1; i < words.size(); ++i)
    if (LeadingLess{}(words[i], words[lead])) lead = i;
  const int sign = ints[lead] < 0 ? -1 : 1;
  VermaVector out;
  for (std::size_t i = 0; i < words.size(); ++i) out.add_term(words[i], Rational(ints[i] * sign));
  return out;
}

RatVector coordinates(const VermaVector& v, const std::vector<Word>& basis) {
  RatVector x(basis.size(), Rational(0));
  std::map<Word, std::size_t, WordLess> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& [w, q] : v.terms()) {
    auto it = index.find(w);
    if (it == index.end()) throw ComputationError("word " + to_string(w) + " is not in the level basis");
    x[it->second] = q;
  }
  return x;
}

VermaVector from_coordinates(const RatVector& x, const std::vector<Word>& basis) {
  VermaVector out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], x[i]);
  return out;
}

Module::Module(Rational c, Rational h, std::vector<VermaVector> quotient_generators)
    : c_(std::move(c)), h_(std::move(h)), generators_(std::move(quotient_generators)), orderer_(c_) {
  for (const auto& g : generators_) {
    Rational lv = vector_level(g);
    for (const auto& [w, q] : g.terms()) {
      if (level_of(w) != lv) throw InvalidArgument("quotient generator is not weight-homogeneous");
      for (const auto& m : w)
        if (m.is_central() || m.twice_index() >= 0 || !is_normal(w))
          throw InvalidArgument("quotient generator must be a PBW combination over ns^-");
    }
  }
}

Module::~Module() = default;

VermaVector Module::verma_act(const GeneratorMode& g, const Word& w) {
  ActKey key{g, w};
  {
    std::lock_guard lock(mutex_);
    if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
  }
  VermaVector result = compute_act(g, w);
  std::lock_guard lock(mutex_);
  act_cache_.emplace(std::move(key), result);
  return result;
}

VermaVector Module::verma_act(const GeneratorMode& g, const VermaVector& v) {
  VermaVector out;
  for (const auto& [w, q] : v.terms()) out += verma_act(g, w) * q;
  return out;
}

VermaVector Module::compute_act(const GeneratorMode& x, const Word& w) {
  if (x.is_central()) return VermaVector(w, c_);
  if (!x.is_fermionic() && x.twice_index() == 0) return VermaVector(w, h_ + level_of(w));
  const bool negative = x.twice_index() < 0;
  if (w.empty()) return negative ? VermaVector(Word{x}, 1) : VermaVector{};
  const GeneratorMode& y = w.front();
  if (negative && (x < y || (x == y && !x.is_fermionic()))) {
    Word out{x};
    out.insert(out.end(), w.begin(), w.end());
    return VermaVector(std::move(out), 1);
  }
  const Word rest(w.begin() + 1, w.end());
  auto apply_bracket = [&](const EnvelopingElement& br, const Rational& scale) {
    VermaVector acc;
    for (const auto& [mid, q] : br.terms()) {
      if (mid.empty())
        acc += VermaVector(rest, q * scale);
      else
        acc += verma_act(mid.front(), rest) * (q * scale);
    }
    return acc;
  };
  if (x == y) return apply_bracket(bracket(x, x, c_), frac(1, 2));  // G(r)^2 = [G(r),G(r)]/2
  const Rational sign = (x.is_fermionic() && y.is_fermionic()) ? -1 : 1;
  VermaVector result = verma_act(y, verma_act(x, rest)) * sign;
  result += apply_bracket(bracket(x, y, c_), 1);
  return result;
}

const Module::LevelQuotient& Module::quotient_level(const Rational& level) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = quotient_cache_.find(level); it != quotient_cache_.end()) return it->second;
  }
  LevelQuotient lq;
  lq.verma_words = pbw_words(level);
  for (std::size_t i = 0; i < lq.verma_words.size(); ++i) lq.index.emplace(lq.verma_words[i], i);
  {
    std::lock_guard lock(slice_mutex_);
    if (!slices_) slices_ = std::make_unique<SubmoduleSlices>(*this, generators_);
    lq.submodule = slices_->echelon(level);
  }
  std::vector<bool> pivot(lq.verma_words.size(), false);
  for (auto p : lq.submodule.pivots) pivot[p] = true;
  for (std::size_t i = 0; i < lq.verma_words.size(); ++i)
    if (!pivot[i]) lq.complement.push_back(lq.verma_words[i]);
  std::lock_guard lock(mutex_);
  return quotient_cache_.emplace(level, std::move(lq)).first->second;
}

std::vector<Word> Module::level_basis(const Rational& level) {
  if (level < 0) return {};
  if (!is_quotient()) return pbw_words(level);
  return quotient_level(level).complement;
}

VermaVector Module::reduce(const VermaVector& v) {
  if (!is_quotient() || v.is_zero()) return v;
  std::map<Rational, VermaVector> by_level;
  for (const auto& [w, q] : v.terms()) by_level[level_of(w)].add_term(w, q);
  VermaVector out;
  for (const auto& [lv, part] : by_level) {
    const LevelQuotient& lq = quotient_level(lv);
    RatVector x = coordinates(part, lq.verma_words);
    lq.submodule.reduce(x);
    out += from_coordinates(x, lq.verma_words);
  }
  return out;
}

VermaVector Module::act(const GeneratorMode& g, const VermaVector& v) { return reduce(verma_act(g, v)); }

VermaVector Module::act(const EnvelopingElement& e, const VermaVector& v) {
  VermaVector out;
  for (const auto& [w, q] : e.terms()) {
    VermaVector cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = verma_act(*it, cur);
    out += cur * q;
  }
  return reduce(out);
}

std::vector<VermaVector> Module::singular_vectors(const Rational& level) {
  const std::vector<Word> basis = level_basis(level);
  if (basis.empty()) return {};
  const std::vector<Word> t1 = level_basis(level - frac(1, 2));
  const std::vector<Word> t3 = level_basis(level - frac(3, 2));
  RatMatrix m(t1.size() + t3.size(), RatVector(basis.size(), Rational(0)));
  const GeneratorMode g1 = GeneratorMode::G_twice(1), g3 = GeneratorMode::G_twice(3);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    VermaVector b(basis[j], 1);
    RatVector x1 = coordinates(act(g1, b), t1);
    RatVector x3 = coordinates(act(g3, b), t3);
    for (std::size_t i = 0; i < t1.size(); ++i) m[i][j] = x1[i];
    for (std::size_t i = 0; i < t3.size(); ++i) m[t1.size() + i][j] = x3[i];
  }
  std::vector<VermaVector> out;
  for (const auto& k : kernel(m, basis.size())) out.push_back(normalize_vector(from_coordinates(k, basis)));
  return out;
}

std::vector<std::pair<Rational, std::vector<VermaVector>>> Module::scan_singular(const Rational& max_level) {
  std::vector<std::pair<Rational, std::vector<VermaVector>>> out;
  for (Rational lv = frac(1, 2); lv <= max_level; lv += frac(1, 2)) {
    auto s = singular_vectors(lv);
    if (!s.empty()) out.emplace_back(lv, std::move(s));
  }
  return out;
}

SubmoduleSlices::SubmoduleSlices(Module& verma, std::vector<VermaVector> generators)
    : verma_(verma), generators_(std::move(generators)) {
  close_upwards();
}

void SubmoduleSlices::close_upwards() {
  std::deque<VermaVector> queue;
  auto add = [&](const VermaVector& v) {
    if (v.is_zero()) return;
    const Rational lv = vector_level(v);
    auto& e = closure_[lv];
    const auto words = pbw_words(lv);
    if (e.insert(coordinates(v, words))) queue.push_back(v);
  };
  for (const auto& g : generators_) add(g);
  const GeneratorMode g1 = GeneratorMode::G_twice(1), g3 = GeneratorMode::G_twice(3);
  while (!queue.empty()) {
    VermaVector v = std::move(queue.front());
    queue.pop_front();
    add(verma_.verma_act(g1, v));
    add(verma_.verma_act(g3, v));
  }
}

const RowEchelon& SubmoduleSlices::echelon(const Rational& level) {
  if (auto it = slices_.find(level); it != slices_.end()) return it->second;
  RowEchelon e;
  if (level >= 0) {
    const auto words = pbw_words(level);
    if (auto it = closure_.find(level); it != closure_.end())
      for (const auto& row : it->second.rows) e.insert(row);
    const GeneratorMode gm1 = GeneratorMode::G_twice(-1), gm3 = GeneratorMode::G_twice(-3);
    for (const auto& [g, drop] : {std::pair{gm1, frac(1, 2)}, std::pair{gm3, frac(3, 2)}}) {
      const Rational lower = level - drop;
      if (lower < 0) continue;
      for (const auto& v : basis(lower)) e.insert(coordinates(verma_.verma_act(g, v), words));
    }
  }
  return slices_.emplace(level, std::move(e)).first->second;
}

std::vector<VermaVector> SubmoduleSlices::basis(const Rational& level) {
  const RowEchelon& e = echelon(level);
  if (e.rows.empty()) return {};
  const auto words = pbw_words(level);
  std::vector<VermaVector> out;
  for (const auto& row : e.rows) out.push_back(from_coordinates(row, words));
  return out;
}

std::vector<VermaVector> submodule_level(Module& verma, const std::vector<VermaVector>& generators,
                                         const Rational& level) {
  SubmoduleSlices s(verma, generators);
  return s.basis(level);
}

std::string format_fixture(const Rational& c, const Rational& h, const Rational& level,
                           const std::vector<VermaVector>& vectors) {
  std::ostringstream os;
  os << "c=" << to_string(c) << " h=" << to_string(h) << " level=" << to_string(level) << "\n";
  for (const auto& v : vectors) os << v.to_string() << "\n";
  return os.str();
}

}  // namespace nsmm
