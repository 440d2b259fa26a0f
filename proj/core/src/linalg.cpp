#include "nsmm/linalg.hpp"

#include <utility>

namespace nsmm {

RatMatrix zero_matrix(std::size_t rows, std::size_t cols) { return RatMatrix(rows, RatVector(cols, Rational(0))); }

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatVector multiply(const RatMatrix& a, const RatVector& x) {
  RatVector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) out[i] += a[i][j] * x[j];
  return out;
}

void RowEchelon::reduce(RatVector& v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational f = v[pivots[r]];
    if (f == 0) continue;
    const RatVector& row = rows[r];
    for (std::size_t j = pivots[r]; j < v.size(); ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool RowEchelon::insert(RatVector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  const Rational lead = v[p];
  for (auto& x : v) x /= lead;
  // Keep the echelon form reduced: clear column p from existing rows.
  for (auto& row : rows) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  std::size_t at = 0;
  while (at < pivots.size() && pivots[at] < p) ++at;
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

RowEchelon row_echelon(const RatMatrix& rows, std::size_t cols) {
  RowEchelon e;
  for (const auto& r : rows) {
    RatVector v = r;
    v.resize(cols, Rational(0));
    e.insert(std::move(v));
  }
  return e;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<IntVector> integer_kernel(const RatMatrix& m, std::size_t cols) {
  // Clear denominators row by row, then fraction-free elimination.
  std::vector<IntVector> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    RatVector r = row;
    r.resize(cols, Rational(0));
    IntVector ir = primitive(r);
    bool nonzero = false;
    for (const auto& x : ir) nonzero = nonzero || x != 0;
    if (nonzero) a.push_back(std::move(ir));
  }
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t p = pivots[k];
      Rational s = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (a[k][j] != 0 && x[j] != 0) s += Rational(a[k][j]) * x[j];
      x[p] = -s / Rational(a[k][p]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

std::vector<RatVector> kernel(const RatMatrix& m, std::size_t cols) {
  std::vector<RatVector> out;
  for (const auto& v : integer_kernel(m, cols)) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  RatMatrix aug(n, RatVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = a[i][j];
    aug[i][m] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t sel = r;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(aug[r], aug[sel]);
    const Rational lead = aug[r][c];
    for (auto& x : aug[r]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= m; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;
  RatVector x(m, Rational(0));
  for (std::size_t k = 0; k < r; ++k) x[pivots[k]] = aug[k][m];
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(aug[c], aug[sel]);
    const Rational lead = aug[c][c];
    for (auto& x : aug[c]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  RatMatrix out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

RatVector characteristic_polynomial(const RatMatrix& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = a.size();
  RatVector coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RatMatrix mk = zero_matrix(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = multiply(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    mk = std::move(next);
    RatMatrix amk = multiply(a, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
    coeffs[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return coeffs;
}

}  // namespace nsmm
