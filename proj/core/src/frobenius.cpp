#include "nsmm/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nsmm {

namespace {

RatMatrix value_at_zero(const RegularSingularSystem& sys) {
  RatMatrix a0 = zero_matrix(sys.size(), sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) a0[i][j] = sys.a[i][j].value_at_zero();
  return a0;
}

}  // namespace

IndicialExponents indicial_exponents(const RegularSingularSystem& sys) {
  IndicialExponents out;
  out.characteristic = UPoly(characteristic_polynomial(value_at_zero(sys)));
  UPoly rest = out.characteristic;
  for (const Rational& r : rational_roots(rest)) {
    const UPoly factor(RatVector{Rational(-r), Rational(1)});
    int mult = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, factor);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult;
    }
    out.roots.emplace_back(r, mult);
  }
  out.complete = rest.degree() == 0;
  out.remainder = rest;
  return out;
}

std::vector<RatMatrix> series_matrices(const RegularSingularSystem& sys, std::size_t n) {
  std::vector<RatMatrix> out(n, zero_matrix(sys.size(), sys.size()));
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (sys.a[i][j].is_zero()) continue;
      const RatVector t = sys.a[i][j].taylor(n);
      for (std::size_t k = 0; k < n; ++k) out[k][i][j] = t[k];
    }
  return out;
}

SeriesSolution series_solution(const RegularSingularSystem& sys, const Rational& rho, std::size_t n) {
  const std::size_t d = sys.size();
  const IndicialExponents ex = indicial_exponents(sys);
  const Rational at_rho = ex.characteristic.evaluate(rho);
  if (at_rho != 0) throw InvalidArgument(to_string(rho) + " is not an indicial exponent");
  for (const auto& [r, mult] : ex.roots) {
    const Rational gap = r - rho;
    if (gap > 0 && is_integer(gap) && gap < Rational(static_cast<long>(n)))
      throw ResonanceError("exponents " + to_string(rho) + " and " + to_string(r) + " differ by the integer " +
                           to_string(gap) + "; the series may need logarithms");
  }

  const auto a = series_matrices(sys, n);
  RatMatrix shifted = a[0];
  for (std::size_t i = 0; i < d; ++i) shifted[i][i] -= rho;
  const auto ker = kernel(shifted, d);
  const int mult = std::find_if(ex.roots.begin(), ex.roots.end(), [&](const auto& p) { return p.first == rho; })->second;
  if (static_cast<int>(ker.size()) < mult)
    throw ResonanceError("exponent " + to_string(rho) + " has multiplicity " + std::to_string(mult) +
                         " but a " + std::to_string(ker.size()) + "-dimensional eigenspace");

  SeriesSolution sol;
  sol.exponent = rho;
  RatVector c0 = ker.front();
  const auto lead = std::find_if(c0.begin(), c0.end(), [](const Rational& x) { return x != 0; });
  const Rational s = *lead;
  for (auto& x : c0) x /= s;
  sol.coefficients.push_back(std::move(c0));
  for (std::size_t k = 1; k < n; ++k) {
    RatVector rhs(d, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      const RatVector t = multiply(a[k - j], sol.coefficients[j]);
      for (std::size_t i = 0; i < d; ++i) rhs[i] -= t[i];
    }
    RatMatrix m = a[0];
    for (std::size_t i = 0; i < d; ++i) m[i][i] -= rho + Rational(static_cast<long>(k));
    auto ck = solve(m, rhs);
    if (!ck) throw ResonanceError("singular recursion step at order " + std::to_string(k));
    sol.coefficients.push_back(std::move(*ck));
  }
  return sol;
}

Rational residual(const SeriesSolution& sol, const RegularSingularSystem& sys) {
  const std::size_t n = sol.order();
  const auto a = series_matrices(sys, n);
  Rational worst = 0;
  for (std::size_t k = 0; k < n; ++k) {
    RatVector r = sol.coefficients[k];
    for (auto& x : r) x *= sol.exponent + Rational(static_cast<long>(k));
    for (std::size_t j = 0; j <= k; ++j) {
      const RatVector t = multiply(a[k - j], sol.coefficients[j]);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= t[i];
    }
    for (const auto& x : r) worst = std::max(worst, abs(x));
  }
  return worst;
}

namespace {

std::vector<double> magnitudes(const SeriesSolution& sol) {
  std::vector<double> m;
  for (const auto& c : sol.coefficients) {
    double best = 0;
    for (const auto& x : c) best = std::max(best, std::fabs(x.get_d()));
    m.push_back(best);
  }
  return m;
}

}  // namespace

double growth_ratio(const SeriesSolution& sol) {
  const auto m = magnitudes(sol);
  const std::size_t n = m.size();
  if (n < 3) return 0;
  // Windowed maxima smooth out coefficients that vanish by parity or cross zero.
  std::vector<double> w(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) w[k] = std::max(m[k], m[k + 1]);
  double q = 0;
  for (std::size_t k = w.size() - std::max<std::size_t>(w.size() / 4, 2); k < w.size(); ++k)
    if (k > 0 && w[k - 1] > 0) q = std::max(q, w[k] / w[k - 1]);
  return q;
}

Evaluation evaluate(const SeriesSolution& sol, double z) {
  if (std::fabs(z) >= 1) throw OutOfDisc("|z| must be below 1 for the series at 0");
  Evaluation out;
  const std::size_t d = sol.coefficients.empty() ? 0 : sol.coefficients[0].size();
  const double rho = sol.exponent.get_d();
  std::complex<double> zr;
  if (z == 0)
    zr = rho == 0 ? 1.0 : (rho > 0 ? 0.0 : std::numeric_limits<double>::infinity());
  else
    zr = std::pow(std::complex<double>(z, 0), rho);
  out.value.assign(d, 0.0);
  double zk = 1;
  for (const auto& c : sol.coefficients) {
    for (std::size_t i = 0; i < d; ++i) out.value[i] += c[i].get_d() * zk;
    zk *= z;
  }
  for (auto& v : out.value) v *= zr;

  const auto m = magnitudes(sol);
  out.growth = growth_ratio(sol);
  const double q = out.growth, n = static_cast<double>(sol.order());
  if (q == 0) {
    out.tail_bound = 0;
    return out;
  }
  double c = 0;
  for (std::size_t k = sol.order() - sol.order() / 4 - 1; k < sol.order(); ++k)
    c = std::max(c, m[k] / std::pow(q, static_cast<double>(k)));
  const double x = q * std::fabs(z);
  out.tail_bound = x < 1 ? std::abs(zr) * c * std::pow(x, n) / (1 - x) : std::numeric_limits<double>::infinity();
  return out;
}

Evaluation evaluate(const SeriesSolution& sol, const Rational& z) {
  if (abs(z) >= 1) throw OutOfDisc("|z| must be below 1 for the series at 0");
  return evaluate(sol, z.get_d());
}

}  // namespace nsmm
