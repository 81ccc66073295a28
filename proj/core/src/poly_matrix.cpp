#include "wgram/poly_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wgram {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = IntPoly{1};
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<IntPoly>& d) {
  PolyMatrix m(int(d.size()), int(d.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
  return m;
}

std::vector<IntPoly> PolyMatrix::row(int i) const {
  return {e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_};
}

void PolyMatrix::set_row(int i, const std::vector<IntPoly>& r) {
  if (int(r.size()) != cols_) throw std::domain_error("PolyMatrix: row size mismatch");
  std::copy(r.begin(), r.end(), e_.begin() + size_t(i) * cols_);
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

Int PolyMatrix::max_abs_coeff() const {
  Int m = 0;
  for (const auto& p : e_)
    for (const auto& c : p.coeffs()) {
      Int a = abs(c);
      if (a > m) m = a;
    }
  return m;
}

IntMatrix PolyMatrix::operator()(const Int& b) const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j)(b);
  return m;
}

void SparsePolyMatrix::add(int row, int col, IntPoly value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::domain_error("SparsePolyMatrix: index out of range");
  if (value.is_zero()) return;
  e_.push_back({row, col, std::move(value)});
  for (size_t k = e_.size(); k > 1; --k) {
    auto &a = e_[k - 2], &b = e_[k - 1];
    if (a.row < b.row || (a.row == b.row && a.col < b.col)) break;
    if (a.row == b.row && a.col == b.col)
      throw std::domain_error("SparsePolyMatrix: duplicate entry");
    std::swap(a, b);
  }
}

SparsePolyMatrix SparsePolyMatrix::from_dense(const PolyMatrix& d) {
  SparsePolyMatrix s(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (!d.at(i, j).is_zero()) s.e_.push_back({i, j, d.at(i, j)});
  return s;
}

PolyMatrix SparsePolyMatrix::to_dense() const {
  PolyMatrix d(rows_, cols_);
  for (const auto& e : e_) d.at(e.row, e.col) = e.value;
  return d;
}

SparsePolyMatrix SparsePolyMatrix::transposed() const {
  SparsePolyMatrix t(cols_, rows_);
  for (const auto& e : e_) t.e_.push_back({e.col, e.row, e.value});
  std::sort(t.e_.begin(), t.e_.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return t;
}

IntMatrix SparsePolyMatrix::operator()(const Int& b) const {
  IntMatrix m(rows_, cols_);
  for (const auto& e : e_) m.at(e.row, e.col) = e.value(b);
  return m;
}

bool SparsePolyMatrix::operator==(const SparsePolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || e_.size() != o.e_.size()) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k].row != o.e_[k].row || e_[k].col != o.e_[k].col || !(e_[k].value == o.e_[k].value))
      return false;
  return true;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("mul: dimension mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const IntPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
      }
    }
  return c;
}

PolyMatrix mul(const SparsePolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("mul: dimension mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (const auto& e : a.entries())
    for (int j = 0; j < b.cols(); ++j) {
      if (b.at(e.col, j).is_zero()) continue;
      c.at(e.row, j) = c.at(e.row, j) + e.value * b.at(e.col, j);
    }
  return c;
}

PolyMatrix mul(const PolyMatrix& a, const SparsePolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("mul: dimension mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (const auto& e : b.entries())
    for (int i = 0; i < a.rows(); ++i) {
      if (a.at(i, e.row).is_zero()) continue;
      c.at(i, e.col) = c.at(i, e.col) + a.at(i, e.row) * e.value;
    }
  return c;
}

std::vector<IntPoly> mul(const std::vector<IntPoly>& v, const PolyMatrix& a) {
  if (int(v.size()) != a.rows()) throw std::domain_error("mul: dimension mismatch");
  std::vector<IntPoly> w(a.cols());
  for (int k = 0; k < a.rows(); ++k) {
    if (v[k].is_zero()) continue;
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(k, j).is_zero()) continue;
      w[j] = w[j] + v[k] * a.at(k, j);
    }
  }
  return w;
}

std::vector<IntPoly> mul(const std::vector<IntPoly>& v, const SparsePolyMatrix& a) {
  if (int(v.size()) != a.rows()) throw std::domain_error("mul: dimension mismatch");
  std::vector<IntPoly> w(a.cols());
  for (const auto& e : a.entries()) {
    if (v[e.row].is_zero()) continue;
    w[e.col] = w[e.col] + v[e.row] * e.value;
  }
  return w;
}

IntPoly matrix_gcd(const PolyMatrix& a) {
  IntPoly g;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const IntPoly& e = a.at(i, j);
      if (e.is_zero()) continue;
      g = g.is_zero() ? (e.leading() < 0 ? -e : e) : gcd_subresultant(g, e);
      if (g.degree() == 0 && g.leading() == 1) return g;
    }
  return g;
}

void write_matrix(std::ostream& os, const PolyMatrix& m) {
  os << m.rows() << ' ' << m.cols() << " dense\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ';';
      os << m.at(i, j).str();
    }
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const SparsePolyMatrix& m) {
  os << m.rows() << ' ' << m.cols() << " sparse\n";
  for (const auto& e : m.entries())
    os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.str() << '\n';
}

namespace {

IntPoly parse_entry(const std::string& tok) {
  LaurentPoly l = LaurentPoly::parse(tok);
  if (l.valuation() < 0)
    throw std::domain_error("read_matrix: negative Laurent offset in a Z[X] matrix");
  return l.coeffs().shifted(l.valuation());
}

}  // namespace

MatrixFile read_matrix(std::istream& is) {
  int rows, cols;
  std::string format;
  if (!(is >> rows >> cols >> format)) throw std::domain_error("read_matrix: bad header");
  if (rows <= 0 || cols <= 0) throw std::domain_error("read_matrix: bad dimensions");
  MatrixFile f;
  if (format == "dense") {
    f.sparse = false;
    f.dense = PolyMatrix(rows, cols);
    std::string line;
    std::getline(is, line);
    for (int i = 0; i < rows; ++i) {
      if (!std::getline(is, line)) throw std::domain_error("read_matrix: missing row");
      std::istringstream ls(line);
      std::string tok;
      for (int j = 0; j < cols; ++j) {
        if (!std::getline(ls, tok, ';')) throw std::domain_error("read_matrix: missing entry");
        f.dense.at(i, j) = parse_entry(tok);
      }
    }
  } else if (format == "sparse") {
    f.sparse = true;
    f.coord = SparsePolyMatrix(rows, cols);
    int i, j;
    std::string tok;
    while (is >> i >> j >> tok) f.coord.add(i - 1, j - 1, parse_entry(tok));
  } else {
    throw std::domain_error("read_matrix: unknown format " + format);
  }
  return f;
}

}  // namespace wgram
