#pragma once

#include <string>
#include <vector>

#include "nsmm/rational.hpp"

namespace nsmm {

struct ModelParams {
  long p;
  long q;
};

struct ModuleLabel {
  ModelParams params;
  long m;
  long n;
  Rational h;
};

/// Throws InvalidModel naming the violated condition.
void validate_model(long p, long q);

/// c_{p,q} = (3/2)(1 - 2(p-q)^2/(pq)).
Rational central_charge(long p, long q);

/// ((np - mq)^2 - (p - q)^2) / (8pq); requires 0<m<p, 0<n<q, m-n even.
Rational highest_weight(long p, long q, long m, long n);

/// Every admissible (m, n), in lexicographic order.
std::vector<ModuleLabel> all_labels(long p, long q);

/// Distinct weights with the lexicographically first representative label,
/// sorted by h.
std::vector<ModuleLabel> irreducible_list(long p, long q);

/// Levels of the two generating singular vectors of M(c_{p,q}, h_{m,n}):
/// mn/2 and (p-m)(q-n)/2, ascending.
std::pair<Rational, Rational> singular_levels(const ModuleLabel& label);

/// Finds the label with weight h, or throws UnknownWeight.
ModuleLabel label_for_weight(long p, long q, const Rational& h);

}  // namespace nsmm
