// Test-only oracles, independent of the implementation paths they check:
// exhaustive lattice enumeration, rational Gaussian elimination, Smith
// normal form, the rational-arithmetic Euclidean gcd, and fraction-free
// Bareiss elimination over Z[X].

#pragma once

#include <optional>

#include "wgram/poly_matrix.hpp"

namespace wgram::oracle {

struct ShortestVector {
  Int x, y;  // x > 0
  Int norm2;
  bool unique_up_to_sign;
};

// Enumerates all lattice vectors [x, y] of L_{a,b} with squared norm < b
// (only the symmetric representative of a*x can be that short) and returns
// the smallest, or nullopt when none exists.
inline std::optional<ShortestVector> shortest_vector_enum(const Int& a, const Int& b) {
  std::optional<ShortestVector> best;
  int ties = 0;
  for (Int x = 1; x * x < b; ++x) {
    Int y = symmetric_mod(a * x, b);
    Int n = x * x + y * y;
    if (n >= b) continue;
    if (!best || n < best->norm2) {
      best = ShortestVector{x, y, n, true};
      ties = 1;
    } else if (n == best->norm2) {
      ++ties;
    }
  }
  if (best) best->unique_up_to_sign = (ties == 1);
  return best;
}

// Row kernel basis of A over Q: eliminate [A | I], rows with vanishing
// A-part carry kernel vectors in the augmented part.
inline std::vector<RatVec> rational_kernel(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  std::vector<RatVec> rows(m, RatVec(n + m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = Rat(a.at(i, j));
    rows[i][n + i] = 1;
  }
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = 0; j < n + m; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  std::vector<RatVec> kernel;
  for (int i = rank; i < m; ++i) kernel.emplace_back(rows[i].begin() + n, rows[i].end());
  return kernel;
}

// Nonzero Smith normal form diagonal d_1 | d_2 | ..., naive pivoting.
inline std::vector<Int> smith_diagonal(IntMatrix a) {
  const int m = a.rows(), n = a.cols();
  int t = 0;
  std::vector<Int> diag;
  while (t < m && t < n) {
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        Int v = abs(a.at(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    for (int j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(pi, j));
    for (int i = 0; i < m; ++i) std::swap(a.at(i, t), a.at(i, pj));
    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      Int q = a.at(i, t) / a.at(t, t);
      if (q != 0)
        for (int j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
      if (a.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      Int q = a.at(t, j) / a.at(t, t);
      if (q != 0)
        for (int i = t; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; rescan this corner
    // Divisibility fix: the pivot must divide every remaining entry.
    bool fixed = true;
    for (int i = t + 1; i < m && fixed; ++i)
      for (int j = t + 1; j < n && fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          for (int jj = 0; jj < n; ++jj) a.at(t, jj) += a.at(i, jj);
          fixed = false;
        }
    if (!fixed) continue;
    diag.push_back(abs(a.at(t, t)));
    ++t;
  }
  return diag;
}

// gcd of the primitive parts via rational-arithmetic Euclid, primitive with
// positive leading coefficient.
inline IntPoly euclid_gcd(const IntPoly& f, const IntPoly& g) {
  RatPoly r0(f), r1(g);
  while (!r1.is_zero()) {
    // r0 mod r1
    RatPoly rem = r0;
    int dg = r1.degree();
    while (rem.degree() >= dg) {
      Rat q = rem[rem.degree()] / r1[dg];
      int shift = rem.degree() - dg;
      RatVec c(rem.coeffs());
      for (int j = 0; j <= dg; ++j) c[shift + j] -= q * r1[j];
      rem = RatPoly::from_coeffs(std::move(c));
    }
    r0 = r1;
    r1 = rem;
  }
  if (r0.is_zero()) return {};
  return content_and_primitive(r0).primitive;
}

// Fraction-free Bareiss elimination of [A | I] over Z[X]; rows with zero
// A-part give (scaled) kernel vectors, returned primitivized.
inline std::vector<std::vector<IntPoly>> poly_kernel(const PolyMatrix& a) {
  const int m = a.rows(), n = a.cols();
  std::vector<std::vector<IntPoly>> rows(m, std::vector<IntPoly>(n + m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
    rows[i][n + i] = IntPoly{1};
  }
  IntPoly prev{1};
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = rank + 1; i < m; ++i) {
      for (int j = 0; j < n + m; ++j) {
        if (j == col) continue;
        IntPoly num = rows[i][j] * rows[rank][col] - rows[i][col] * rows[rank][j];
        rows[i][j] = num.is_zero() ? IntPoly{} : divexact(num, prev);
      }
      rows[i][col] = {};
    }
    prev = rows[rank][col];
    ++rank;
  }
  std::vector<std::vector<IntPoly>> kernel;
  for (int i = 0; i < m; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j) zero = zero && rows[i][j].is_zero();
    if (!zero) continue;
    std::vector<IntPoly> v(rows[i].begin() + n, rows[i].end());
    IntPoly g;
    for (const auto& p : v)
      if (!p.is_zero()) g = g.is_zero() ? (p.leading() < 0 ? -p : p) : gcd_subresultant(g, p);
    if (g.is_zero()) continue;  // the zero row of A itself
    for (auto& p : v)
      if (!p.is_zero()) p = divexact(p, g);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

inline IntPoly poly_det(const PolyMatrix& a) {
  const int n = a.rows();
  std::vector<std::vector<IntPoly>> rows(n, std::vector<IntPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
  IntPoly prev{1};
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (rows[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!rows[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return {};
      std::swap(rows[k], rows[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        IntPoly num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
        rows[i][j] = num.is_zero() ? IntPoly{} : divexact(num, prev);
      }
    prev = rows[k][k];
  }
  return sign > 0 ? rows[n - 1][n - 1] : -rows[n - 1][n - 1];
}

}  // namespace wgram::oracle
