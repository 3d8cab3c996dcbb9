#include "detff.hpp"

namespace reflinv {

Poly det_fraction_free(const PolyMatrix& m) {
  size_t n = m.size();
  if (n == 0) throw Error(Errc::Internal, "determinant of empty matrix");
  unsigned nvars = m[0][0].nvars();
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::Internal, "determinant of non-square matrix");
  if (n == 1) return m[0][0];

  PolyMatrix a = m;
  bool negate = false;
  Poly prev_pivot = Poly::constant(nvars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    // full pivoting on the cheapest nonzero entry
    size_t pr = n, pc = n;
    size_t best_terms = 0;
    long best_deg = 0;
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        size_t tc = a[i][j].term_count();
        long dg = a[i][j].degree();
        if (pr == n || tc < best_terms || (tc == best_terms && dg < best_deg)) {
          pr = i;
          pc = j;
          best_terms = tc;
          best_deg = dg;
        }
      }
    if (pr == n) return Poly(nvars);  // singular
    if (pr != k) {
      std::swap(a[pr], a[k]);
      negate = !negate;
    }
    if (pc != k) {
      for (size_t i = 0; i < n; ++i) std::swap(a[i][pc], a[i][k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (num.is_zero()) {
          a[i][j] = Poly(nvars);
          continue;
        }
        auto q = num.exact_div(prev_pivot);
        if (!q) throw Error(Errc::Internal, "inexact division in Bareiss elimination");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Poly(nvars);
    }
    prev_pivot = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {
Poly det_cofactor_rec(const PolyMatrix& m, std::vector<size_t>& cols, size_t row) {
  unsigned nvars = m[0][0].nvars();
  if (cols.size() == 1) return m[row][cols[0]];
  Poly acc(nvars);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (m[row][cols[j]].is_zero()) continue;
    size_t cj = cols[j];
    cols.erase(cols.begin() + long(j));
    Poly sub = det_cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + long(j), cj);
    Poly term = m[row][cj] * sub;
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}
}  // namespace

Poly det_cofactor(const PolyMatrix& m) {
  size_t n = m.size();
  if (n == 0) throw Error(Errc::Internal, "determinant of empty matrix");
  std::vector<size_t> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = i;
  return det_cofactor_rec(m, cols, 0);
}

}  // namespace reflinv
