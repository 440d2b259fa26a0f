#include "nsmm/minimal_models.hpp"

#include <algorithm>
#include <numeric>

namespace nsmm {

void validate_model(long p, long q) {
  if (p <= 1 || q <= 1) throw InvalidModel("p and q must both exceed 1");
  if ((p - q) % 2 != 0) throw InvalidModel("p - q must be even");
  // std::gcd(0, q) = q, so p = q is rejected here.
  if (std::gcd((p - q) / 2, q) != 1) throw InvalidModel("(p - q)/2 and q must be relatively prime");
}

Rational central_charge(long p, long q) {
  validate_model(p, q);
  Rational d = p - q;
  return frac(3, 2) * (1 - 2 * d * d / Rational(p * q));
}

Rational highest_weight(long p, long q, long m, long n) {
  validate_model(p, q);
  if (m <= 0 || m >= p || n <= 0 || n >= q) throw InvalidArgument("need 0 < m < p and 0 < n < q");
  if ((m - n) % 2 != 0) throw InvalidArgument("m - n must be even");
  Integer a = n * p - m * q, b = p - q;
  return Rational(a * a - b * b) / Rational(8 * p * q);
}

std::vector<ModuleLabel> all_labels(long p, long q) {
  validate_model(p, q);
  std::vector<ModuleLabel> out;
  for (long m = 1; m < p; ++m)
    for (long n = 1; n < q; ++n)
      if ((m - n) % 2 == 0) out.push_back({{p, q}, m, n, highest_weight(p, q, m, n)});
  return out;
}

std::vector<ModuleLabel> irreducible_list(long p, long q) {
  std::vector<ModuleLabel> out;
  for (auto& l : all_labels(p, q))
    if (std::none_of(out.begin(), out.end(), [&](const ModuleLabel& x) { return x.h == l.h; })) out.push_back(l);
  std::stable_sort(out.begin(), out.end(), [](const ModuleLabel& a, const ModuleLabel& b) { return a.h < b.h; });
  return out;
}

std::pair<Rational, Rational> singular_levels(const ModuleLabel& l) {
  Rational a = frac(l.m * l.n, 2);
  Rational b = frac((l.params.p - l.m) * (l.params.q - l.n), 2);
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

ModuleLabel label_for_weight(long p, long q, const Rational& h) {
  for (auto& l : irreducible_list(p, q))
    if (l.h == h) return l;
  throw UnknownWeight("weight " + to_string(h) + " is not in the (" + std::to_string(p) + "," + std::to_string(q) +
                      ") minimal model");
}

}  // namespace nsmm
