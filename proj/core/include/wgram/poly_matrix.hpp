// Matrices over Z[X] in dense and sparse (coordinate) form, with conversion
// and multiplication routines between them. Linear algebra always runs on
// the dense format; the sparse one exists because representing matrices of
// W-graph generators are extremely sparse.
//
// Text format (shared with the CLI): header "rows cols dense|sparse"; dense
// rows follow one per line, ';'-separated polynomials, each an ascending
// comma-separated coefficient list with an optional Laurent offset prefix
// "d:". Sparse lines are "i j poly" (1-based). Integers in decimal.

#pragma once

#include <iosfwd>
#include <vector>

#include "wgram/integer_linear.hpp"
#include "wgram/poly.hpp"

namespace wgram {

class SparsePolyMatrix;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static PolyMatrix identity(int n);
  static PolyMatrix diagonal(const std::vector<IntPoly>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  IntPoly& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const IntPoly& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  std::vector<IntPoly> row(int i) const;
  void set_row(int i, const std::vector<IntPoly>& r);

  PolyMatrix transposed() const;
  bool is_zero() const;
  int max_degree() const;  // -1 for the zero matrix
  Int max_abs_coeff() const;

  IntMatrix operator()(const Int& b) const;  // entrywise specialization

  bool operator==(const PolyMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<IntPoly> e_;
};

struct SparseEntry {
  int row, col;
  IntPoly value;
};

class SparsePolyMatrix {
 public:
  SparsePolyMatrix() = default;
  SparsePolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<SparseEntry>& entries() const { return e_; }

  void add(int row, int col, IntPoly value);  // drops zeros, keeps row-major order

  static SparsePolyMatrix from_dense(const PolyMatrix& d);
  PolyMatrix to_dense() const;

  SparsePolyMatrix transposed() const;
  IntMatrix operator()(const Int& b) const;

  bool operator==(const SparsePolyMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseEntry> e_;
};

// Direct (non-lifted) products, used for verification.
PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mul(const SparsePolyMatrix& a, const PolyMatrix& b);
PolyMatrix mul(const PolyMatrix& a, const SparsePolyMatrix& b);
std::vector<IntPoly> mul(const std::vector<IntPoly>& v, const PolyMatrix& a);
std::vector<IntPoly> mul(const std::vector<IntPoly>& v, const SparsePolyMatrix& a);

// Overall gcd of the entries (positive leading coefficient); zero for the
// zero matrix.
IntPoly matrix_gcd(const PolyMatrix& a);

void write_matrix(std::ostream& os, const PolyMatrix& m);
void write_matrix(std::ostream& os, const SparsePolyMatrix& m);

struct MatrixFile {
  bool sparse;
  PolyMatrix dense;        // filled when !sparse
  SparsePolyMatrix coord;  // filled when sparse
  PolyMatrix as_dense() const { return sparse ? coord.to_dense() : dense; }
};
MatrixFile read_matrix(std::istream& is);

}  // namespace wgram
