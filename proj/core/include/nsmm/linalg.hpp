#pragma once

#include <optional>
#include <vector>

#include "nsmm/rational.hpp"

namespace nsmm {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major
using IntVector = std::vector<Integer>;

RatMatrix zero_matrix(std::size_t rows, std::size_t cols);
RatMatrix identity_matrix(std::size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& x);

/// Reduced row echelon form of the span of `rows`, zero rows dropped.
struct RowEchelon {
  RatMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing

  std::size_t rank() const { return rows.size(); }
  /// Adds `v` to the span; returns false when it was already contained.
  bool insert(RatVector v);
  /// Subtracts the row combination eliminating all pivot coordinates of `v`.
  void reduce(RatVector& v) const;
};

RowEchelon row_echelon(const RatMatrix& rows, std::size_t cols);

/// Nullspace of `m` (rows x cols) via fraction-free (Bareiss) elimination.
/// Each basis vector is primitive: integer entries with gcd 1.
std::vector<IntVector> integer_kernel(const RatMatrix& m, std::size_t cols);

/// Rational nullspace basis (scaled integer kernel).
std::vector<RatVector> kernel(const RatMatrix& m, std::size_t cols);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Characteristic polynomial det(x I - a), coefficients low to high (monic).
RatVector characteristic_polynomial(const RatMatrix& a);

/// Scales a rational vector to a primitive integer vector (zero stays zero).
IntVector primitive(const RatVector& v);

}  // namespace nsmm
