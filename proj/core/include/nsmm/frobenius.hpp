#pragma once

// Frobenius series solutions of z Y' = A(z) Y at the regular singular point 0.

#include <complex>
#include <vector>

#include "nsmm/null_ode.hpp"

namespace nsmm {

struct IndicialExponents {
  /// Rational eigenvalues of A(0) with algebraic multiplicity, ascending.
  std::vector<std::pair<Rational, int>> roots;
  /// det(x I - A(0)), coefficients low to high.
  UPoly characteristic;
  /// False when the characteristic polynomial has non-rational roots; the
  /// unfactored part is then `remainder`.
  bool complete = true;
  UPoly remainder;
};

IndicialExponents indicial_exponents(const RegularSingularSystem& sys);

/// Y = z^rho sum_k c_k z^k.
struct SeriesSolution {
  Rational exponent;
  std::vector<RatVector> coefficients;
  std::size_t order() const { return coefficients.size(); }
};

/// Taylor coefficients A_0 .. A_{n-1} of A(z).
std::vector<RatMatrix> series_matrices(const RegularSingularSystem& sys, std::size_t n);

/// Exact recursion (A_0 - (rho+k) I) c_k = -sum_{j<k} A_{k-j} c_j.
/// Throws ResonanceError when rho + k is an exponent for some 0 < k < n, or
/// when rho is a repeated exponent with a deficient eigenspace.
SeriesSolution series_solution(const RegularSingularSystem& sys, const Rational& rho, std::size_t n = 40);

/// Largest |entry| of the residual coefficients
/// (rho+k) c_k - sum_{j<=k} A_{k-j} c_j for k < order.
Rational residual(const SeriesSolution& sol, const RegularSingularSystem& sys);

struct Evaluation {
  std::vector<std::complex<double>> value;
  /// Heuristic bound on the truncated tail from a geometric majorant fitted
  /// to the last quarter of the coefficients; infinite when the fit diverges.
  double tail_bound = 0;
  /// Fitted ratio q with |c_k| <= C q^k.
  double growth = 0;
};

/// Partial sum times z^rho (principal branch). Throws OutOfDisc when |z| >= 1.
Evaluation evaluate(const SeriesSolution& sol, double z);
Evaluation evaluate(const SeriesSolution& sol, const Rational& z);

/// Fitted geometric growth ratio of the coefficients (see Evaluation::growth).
double growth_ratio(const SeriesSolution& sol);

}  // namespace nsmm
