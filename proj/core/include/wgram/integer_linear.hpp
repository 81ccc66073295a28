// Linear algebra over Z and Q via the p-adic decomposition algorithm:
// membership in the pure closure of a row lattice, rank-1 nullspaces,
// inverses B*A = c*I with gcd(B,c) = 1, and matrix exponents.
//
// The working prime is small (default 251) so the per-digit solves run on
// machine words; the digits are assembled p-adically and the rational
// coefficients are recovered by lattice reduction, followed by an exact
// residual check.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wgram/numeric.hpp"

namespace wgram {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  // Clears the common denominator of a rational matrix (one global scalar,
  // so row kernels are unchanged).
  static IntMatrix from_rational(const std::vector<RatVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const { return IntVec(e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_); }
  void set_row(int i, const IntVec& r);
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVec mul(const IntVec& v, const IntMatrix& a);
bool is_zero(const IntVec& v);

// v = (1/denominator) * sum numerators[j] * row_j, gcd(denominator, numerators) = 1.
struct SpanDecomposition {
  IntVec numerators;
  Int denominator;
};

enum class DecomposeStatus { InSpan, NotInClosure, BadPrime };

struct DecomposeResult {
  DecomposeStatus status;
  SpanDecomposition decomp;  // valid iff status == InSpan
};

// Incrementally tracked row space over Q with mod-p bookkeeping. Rows held
// exactly; the mod-p echelon answers independence fast, and the digit-wise
// p-adic expansion plus rational recovery answers exact membership.
class PadicRowSpace {
 public:
  PadicRowSpace(std::uint32_t p, int ncols);

  std::uint32_t prime() const { return p_; }
  int rows() const { return int(rows_.size()); }
  int cols() const { return ncols_; }
  const IntVec& row(int i) const { return rows_[i]; }

  enum class Verdict { Independent, Dependent, BadPrime };
  struct ConsiderResult {
    Verdict verdict;
    SpanDecomposition decomp;  // valid iff verdict == Dependent
  };

  // Appends w when it is independent (detected mod p, which is exact evidence);
  // otherwise either produces the exact decomposition or reports BadPrime
  // (w is Q-independent but its reduction is not).
  ConsiderResult consider(const IntVec& w);

  // Exact membership of v in the Q-span of the current rows.
  DecomposeResult decompose(const IntVec& v) const;

 private:
  std::optional<std::vector<std::uint32_t>> solve_mod(std::vector<std::uint32_t> vbar) const;

  std::uint32_t p_;
  int ncols_;
  std::vector<IntVec> rows_;
  std::vector<std::vector<std::uint32_t>> ech_;    // echelon rows, pivot normalized to 1
  std::vector<std::vector<std::uint32_t>> trans_;  // ech_[k] = trans_[k] * reduced rows
  std::vector<int> pivot_;
};

// One-shot p-adic decomposition of v against the rows of A (which must be
// Q-linearly independent; mod-p dependence is reported as BadPrime).
DecomposeResult padic_decompose(const IntMatrix& a, const IntVec& v, std::uint32_t p);

// Primitive kernel vector of a matrix with 1-dimensional row kernel; the
// rank condition is verified as a side effect. Sign: first nonzero entry
// positive.
// Throws std::domain_error when the kernel is 0 or has dimension > 1.
IntVec int_nullspace_rank1(const IntMatrix& a, std::uint32_t first_prime = 251);
IntVec int_nullspace_rank1(const std::vector<RatVec>& a, std::uint32_t first_prime = 251);

struct IntInverse {
  IntMatrix basis;  // B, primitive
  Int scale;        // c > 0, B*A = c*I, gcd(B, c) = 1
};

// Throws std::domain_error on singular input (detected via persistent
// mod-p dependence across the prime schedule).
IntInverse int_inverse(const IntMatrix& a, std::uint32_t first_prime = 251);
IntInverse int_inverse(const std::vector<RatVec>& a, std::uint32_t first_prime = 251);

// Exponent of A: positive generator of the annihilator of Z^n / im(A);
// coincides with the scale c of the primitive inverse.
Int int_exponent(const IntMatrix& a, std::uint32_t first_prime = 251);

// Fraction-free determinant (Bareiss); used for balancedness statistics.
Int int_det(const IntMatrix& a);

}  // namespace wgram
