#include "wgram/integer_linear.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "wgram/rational_recovery.hpp"

namespace wgram {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) throw std::domain_error("IntMatrix: no rows");
  IntMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMatrix IntMatrix::from_rational(const std::vector<RatVec>& rows) {
  Int den = 1;
  for (const auto& r : rows)
    for (const auto& q : r) den = lcm(den, Int(q.get_den()));
  IntMatrix m(int(rows.size()), int(rows.at(0).size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = rows[i][j];
      m.at(i, j) = Int(q.get_num()) * (den / Int(q.get_den()));
    }
  return m;
}

void IntMatrix::set_row(int i, const IntVec& r) {
  if (int(r.size()) != cols_) throw std::domain_error("IntMatrix: row size mismatch");
  std::copy(r.begin(), r.end(), e_.begin() + size_t(i) * cols_);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("mul: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec mul(const IntVec& v, const IntMatrix& a) {
  if (int(v.size()) != a.rows()) throw std::domain_error("mul: dimension mismatch");
  IntVec w(a.cols());
  for (int k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    for (int j = 0; j < a.cols(); ++j) w[j] += v[k] * a.at(k, j);
  }
  return w;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

std::uint32_t mod_p(const Int& x, std::uint32_t p) {
  return std::uint32_t(mpz_fdiv_ui(x.get_mpz_t(), p));
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

}  // namespace

PadicRowSpace::PadicRowSpace(std::uint32_t p, int ncols) : p_(p), ncols_(ncols) {}

std::optional<std::vector<std::uint32_t>> PadicRowSpace::solve_mod(
    std::vector<std::uint32_t> vbar) const {
  std::vector<std::uint32_t> coeff(ech_.size(), 0);
  for (size_t k = 0; k < ech_.size(); ++k) {
    std::uint32_t c = vbar[pivot_[k]];
    if (c == 0) continue;
    coeff[k] = c;
    const auto& e = ech_[k];
    for (int j = 0; j < ncols_; ++j)
      vbar[j] = std::uint32_t((vbar[j] + std::uint64_t(p_ - e[j]) * c) % p_);
  }
  for (auto x : vbar)
    if (x != 0) return std::nullopt;
  // x = coeff * trans
  std::vector<std::uint32_t> x(rows_.size(), 0);
  for (size_t k = 0; k < ech_.size(); ++k) {
    if (coeff[k] == 0) continue;
    for (size_t i = 0; i < rows_.size(); ++i)
      x[i] = std::uint32_t((x[i] + std::uint64_t(coeff[k]) * trans_[k][i]) % p_);
  }
  return x;
}

PadicRowSpace::ConsiderResult PadicRowSpace::consider(const IntVec& w) {
  if (int(w.size()) != ncols_) throw std::domain_error("PadicRowSpace: size mismatch");
  // Reduce w mod p against the echelon, tracking the transform row.
  std::vector<std::uint32_t> wbar(ncols_);
  for (int j = 0; j < ncols_; ++j) wbar[j] = mod_p(w[j], p_);
  std::vector<std::uint32_t> t(rows_.size() + 1, 0);
  t[rows_.size()] = 1;
  for (size_t k = 0; k < ech_.size(); ++k) {
    std::uint32_t c = wbar[pivot_[k]];
    if (c == 0) continue;
    const auto& e = ech_[k];
    for (int j = 0; j < ncols_; ++j)
      wbar[j] = std::uint32_t((wbar[j] + std::uint64_t(p_ - e[j]) * c) % p_);
    for (size_t i = 0; i < trans_[k].size(); ++i)
      t[i] = std::uint32_t((t[i] + std::uint64_t(p_ - trans_[k][i]) * c) % p_);
  }
  int piv = -1;
  for (int j = 0; j < ncols_; ++j)
    if (wbar[j] != 0) {
      piv = j;
      break;
    }
  if (piv >= 0) {
    // Mod-p independent, hence Q-independent: append.
    std::uint32_t inv = inv_mod_p(wbar[piv], p_);
    for (int j = 0; j < ncols_; ++j) wbar[j] = std::uint32_t(std::uint64_t(wbar[j]) * inv % p_);
    for (auto& x : t) x = std::uint32_t(std::uint64_t(x) * inv % p_);
    rows_.push_back(w);
    for (auto& tr : trans_) tr.resize(rows_.size(), 0);
    ech_.push_back(std::move(wbar));
    trans_.push_back(std::move(t));
    pivot_.push_back(piv);
    return {Verdict::Independent, {}};
  }
  // Mod-p dependent: decide exactly.
  DecomposeResult r = decompose(w);
  switch (r.status) {
    case DecomposeStatus::InSpan:
      return {Verdict::Dependent, std::move(r.decomp)};
    default:
      return {Verdict::BadPrime, {}};
  }
}

DecomposeResult PadicRowSpace::decompose(const IntVec& v) const {
  const size_t m = rows_.size();
  IntVec vd = v;
  IntVec digits_acc(m, 0);  // sum_i p^i a_{i,j}
  Int pk = 1;               // p^{digits}
  long depth = 0;
  long next_attempt = 4;

  while (true) {
    std::vector<std::uint32_t> vbar(ncols_);
    for (int j = 0; j < ncols_; ++j) vbar[j] = mod_p(vd[j], p_);
    auto xbar = solve_mod(std::move(vbar));
    if (!xbar) return {DecomposeStatus::NotInClosure, {}};

    // Lift digits to the symmetric range (-p/2, p/2].
    IntVec digit(m);
    for (size_t j = 0; j < m; ++j) {
      std::uint32_t a = (*xbar)[j];
      digit[j] = (a > p_ / 2) ? Int(long(a) - long(p_)) : Int(long(a));
      digits_acc[j] += pk * digit[j];
    }
    // v_{d+1} = (v_d - digit * A) / p, exactly.
    for (int j = 0; j < ncols_; ++j) {
      Int acc = vd[j];
      for (size_t i = 0; i < m; ++i)
        if (digit[i] != 0) acc -= digit[i] * rows_[i][j];
      assert(mpz_divisible_ui_p(acc.get_mpz_t(), p_));
      mpz_divexact_ui(vd[j].get_mpz_t(), acc.get_mpz_t(), p_);
    }
    pk *= p_;
    ++depth;

    if (is_zero(vd)) {
      // Exact termination: denominator 1, digits are the coefficients.
      return {DecomposeStatus::InSpan, {std::move(digits_acc), 1}};
    }
    if (depth >= next_attempt) {
      next_attempt *= 2;
      // Attempt rational recovery of every coefficient.
      std::vector<RecoveredRational> rec(m);
      bool ok = true;
      for (size_t j = 0; j < m && ok; ++j) {
        auto r = recover_rational(Residue(digits_acc[j], pk));
        if (!r)
          ok = false;
        else
          rec[j] = std::move(*r);
      }
      if (!ok) continue;
      Int den = 1;
      for (const auto& r : rec) den = lcm(den, r.denominator);
      if (mpz_divisible_ui_p(den.get_mpz_t(), p_)) continue;  // p never divides the true a
      IntVec num(m);
      for (size_t j = 0; j < m; ++j) num[j] = rec[j].numerator * (den / rec[j].denominator);
      // Independent check: num * A == den * v.
      bool match = true;
      for (int j = 0; j < ncols_ && match; ++j) {
        Int acc = 0;
        for (size_t i = 0; i < m; ++i)
          if (num[i] != 0) acc += num[i] * rows_[i][j];
        match = (acc == den * v[j]);
      }
      if (match) return {DecomposeStatus::InSpan, {std::move(num), std::move(den)}};
    }
  }
}

DecomposeResult padic_decompose(const IntMatrix& a, const IntVec& v, std::uint32_t p) {
  PadicRowSpace space(p, a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    auto r = space.consider(a.row(i));
    if (r.verdict != PadicRowSpace::Verdict::Independent)
      return {DecomposeStatus::BadPrime, {}};  // rows dependent mod p
  }
  return space.decompose(v);
}

namespace {

// Sign convention: first nonzero entry positive.
void normalize_sign(IntVec& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

std::optional<IntVec> nullspace_attempt(const IntMatrix& a, std::uint32_t p, bool& bad_prime) {
  bad_prime = false;
  const int m = a.rows();
  if (is_zero(a.row(0))) {
    IntVec v(m, 0);
    v[0] = 1;
    // Remaining rows must be independent for a 1-dimensional kernel.
    PadicRowSpace space(p, a.cols());
    for (int i = 1; i < m; ++i) {
      auto r = space.consider(a.row(i));
      if (r.verdict == PadicRowSpace::Verdict::BadPrime) {
        bad_prime = true;
        return std::nullopt;
      }
      if (r.verdict == PadicRowSpace::Verdict::Dependent)
        throw std::domain_error("int_nullspace_rank1: kernel dimension > 1");
    }
    return v;
  }

  PadicRowSpace space(p, a.cols());
  space.consider(a.row(0));
  std::optional<IntVec> found;
  std::vector<int> kept{0};  // row indices currently in the space
  for (int i = 1; i < m; ++i) {
    auto r = space.consider(a.row(i));
    switch (r.verdict) {
      case PadicRowSpace::Verdict::BadPrime:
        bad_prime = true;
        return std::nullopt;
      case PadicRowSpace::Verdict::Independent:
        kept.push_back(i);
        break;
      case PadicRowSpace::Verdict::Dependent: {
        if (found) throw std::domain_error("int_nullspace_rank1: kernel dimension > 1");
        IntVec v(m, 0);
        for (size_t k = 0; k < r.decomp.numerators.size(); ++k)
          v[kept[k]] = r.decomp.numerators[k];
        v[i] = -r.decomp.denominator;
        found = std::move(v);
        break;
      }
    }
  }
  if (!found) throw std::domain_error("int_nullspace_rank1: kernel is 0");
  normalize_sign(*found);
  return found;
}

constexpr int kPrimeRetries = 5;

}  // namespace

IntVec int_nullspace_rank1(const IntMatrix& a, std::uint32_t first_prime) {
  PrimeSchedule primes(first_prime);
  for (int t = 0; t < kPrimeRetries; ++t) {
    bool bad = false;
    auto v = nullspace_attempt(a, primes.next(), bad);
    if (!bad) return *v;
  }
  throw std::domain_error("int_nullspace_rank1: persistent bad primes");
}

IntVec int_nullspace_rank1(const std::vector<RatVec>& a, std::uint32_t first_prime) {
  return int_nullspace_rank1(IntMatrix::from_rational(a), first_prime);
}

namespace {

std::optional<IntInverse> inverse_attempt(const IntMatrix& a, std::uint32_t p) {
  const int n = a.rows();
  PadicRowSpace space(p, n);
  for (int i = 0; i < n; ++i)
    if (space.consider(a.row(i)).verdict != PadicRowSpace::Verdict::Independent)
      return std::nullopt;  // dependent mod p: bad prime or singular
  IntMatrix b(n, n);
  Int c = 1;
  std::vector<SpanDecomposition> rows(n);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    auto r = space.decompose(e);
    // Full rank over Q implies every e_i lies in the row span.
    if (r.status != DecomposeStatus::InSpan)
      throw std::logic_error("int_inverse: identity row escaped a full-rank span");
    c = lcm(c, r.decomp.denominator);
    rows[i] = std::move(r.decomp);
  }
  for (int i = 0; i < n; ++i) {
    Int f = c / rows[i].denominator;
    for (int j = 0; j < n; ++j) b.at(i, j) = rows[i].numerators[j] * f;
  }
  // Normalize gcd(B, c) = 1.
  Int g = c;
  for (int i = 0; i < n && g != 1; ++i)
    for (int j = 0; j < n && g != 1; ++j) g = gcd(g, b.at(i, j));
  if (g != 1) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) /= g;
    c /= g;
  }
  return IntInverse{std::move(b), std::move(c)};
}

}  // namespace

IntInverse int_inverse(const IntMatrix& a, std::uint32_t first_prime) {
  if (a.rows() != a.cols()) throw std::domain_error("int_inverse: not square");
  PrimeSchedule primes(first_prime);
  for (int t = 0; t < kPrimeRetries; ++t) {
    auto inv = inverse_attempt(a, primes.next());
    if (inv) return *inv;
  }
  throw std::domain_error("int_inverse: singular matrix");
}

IntInverse int_inverse(const std::vector<RatVec>& rows, std::uint32_t first_prime) {
  // A = A'/g: from B'A' = c'I we get (t*B') A = (t*c'/g) I with t = g/gcd(g, c').
  Int den = 1;
  for (const auto& r : rows)
    for (const auto& q : r) den = lcm(den, Int(q.get_den()));
  IntInverse inv = int_inverse(IntMatrix::from_rational(rows), first_prime);
  Int t = den / gcd(den, inv.scale);
  if (t != 1) {
    for (int i = 0; i < inv.basis.rows(); ++i)
      for (int j = 0; j < inv.basis.cols(); ++j) inv.basis.at(i, j) *= t;
  }
  inv.scale = inv.scale * t / den;
  return inv;
}

Int int_exponent(const IntMatrix& a, std::uint32_t first_prime) { return int_inverse(a, first_prime).scale; }

Int int_det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("int_det: not square");
  const int n = a.rows();
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace wgram
