#include "wgram/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wgram {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly IntPoly::from_coeffs(IntVec coeffs) {
  IntPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

IntPoly IntPoly::monomial(Int coeff, int exp) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(size_t(exp) + 1, Int(0));
    p.c_[exp] = std::move(coeff);
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return int(i);
  return 0;
}

const Int& IntPoly::leading() const {
  static const Int zero(0);
  return c_.empty() ? zero : c_.back();
}

const Int& IntPoly::operator[](int i) const {
  static const Int zero(0);
  if (i < 0 || i >= int(c_.size())) return zero;
  return c_[i];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntVec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] + b[int(i)];
  return IntPoly::from_coeffs(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntVec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] - b[int(i)];
  return IntPoly::from_coeffs(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntVec c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly::from_coeffs(std::move(c));
}

IntPoly operator*(const Int& a, const IntPoly& b) {
  if (a == 0) return {};
  IntPoly r = b;
  for (auto& c : r.c_) c *= a;
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntVec c(c_.size() + k);
  std::copy(c_.begin(), c_.end(), c.begin() + k);
  return IntPoly::from_coeffs(std::move(c));
}

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

IntPoly IntPoly::parse(const std::string& s) {
  IntVec c;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::domain_error("IntPoly::parse: empty coefficient");
    c.emplace_back(tok);
  }
  return from_coeffs(std::move(c));
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

RatPoly RatPoly::from_coeffs(RatVec coeffs) {
  RatPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::operator[](int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= int(c_.size())) return zero;
  return c_[i];
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatVec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] + b[int(i)];
  return RatPoly::from_coeffs(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatVec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] - b[int(i)];
  return RatPoly::from_coeffs(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVec c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly::from_coeffs(std::move(c));
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool RatPoly::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

IntPoly RatPoly::to_int() const {
  IntVec c;
  c.reserve(c_.size());
  for (const auto& q : c_) {
    if (q.get_den() != 1) throw std::domain_error("RatPoly::to_int: non-integral");
    c.emplace_back(q.get_num());
  }
  return IntPoly::from_coeffs(std::move(c));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

LaurentPoly::LaurentPoly(int valuation, IntPoly coeffs) : val_(valuation), c_(std::move(coeffs)) {
  if (c_.is_zero()) {
    val_ = 0;
  } else {
    int v = c_.valuation();
    if (v > 0) {
      IntVec cut(c_.coeffs().begin() + v, c_.coeffs().end());
      c_ = IntPoly::from_coeffs(std::move(cut));
      val_ += v;
    }
  }
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  return LaurentPoly(exp, IntPoly(std::move(coeff)));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int v = std::min(a.val_, b.val_);
  return LaurentPoly(v, a.c_.shifted(a.val_ - v) + b.c_.shifted(b.val_ - v));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return LaurentPoly(b.val_, -b.c_);
  int v = std::min(a.val_, b.val_);
  return LaurentPoly(v, a.c_.shifted(a.val_ - v) - b.c_.shifted(b.val_ - v));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(a.val_ + b.val_, a.c_ * b.c_);
}

Rat LaurentPoly::operator()(const Rat& x) const {
  if (is_zero()) return Rat(0);
  Rat base = c_(x);
  if (val_ == 0) return base;
  if (x == 0) {
    if (val_ > 0) return Rat(0);
    throw std::domain_error("LaurentPoly: negative valuation at 0");
  }
  Rat xv(1);
  for (int i = 0; i < std::abs(val_); ++i) xv *= x;
  return val_ > 0 ? Rat(base * xv) : Rat(base / xv);
}

std::string LaurentPoly::str() const {
  if (val_ == 0) return c_.str();
  return std::to_string(val_) + ":" + c_.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return LaurentPoly(0, IntPoly::parse(s));
  return LaurentPoly(std::stoi(s.substr(0, colon)), IntPoly::parse(s.substr(colon + 1)));
}

Int int_content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  Int g = int_content(f);
  if (f.leading() < 0) g = -g;
  IntVec c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(x / g);
  return IntPoly::from_coeffs(std::move(c));
}

ContentSplit content_and_primitive(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("content_and_primitive: zero polynomial");
  IntPoly prim = primitive_part(f);
  Int g = int_content(f);
  if (f.leading() < 0) g = -g;
  return {Rat(g), std::move(prim)};
}

ContentSplit content_and_primitive(const RatPoly& f) {
  if (f.is_zero()) throw std::domain_error("content_and_primitive: zero polynomial");
  Int den = 1;
  for (const auto& q : f.coeffs()) den = lcm(den, Int(q.get_den()));
  IntVec c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.emplace_back(Int(q.get_num()) * (den / Int(q.get_den())));
  IntPoly scaled = IntPoly::from_coeffs(std::move(c));  // den * f
  ContentSplit s = content_and_primitive(scaled);
  return {s.content / Rat(den), std::move(s.primitive)};
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo_rem: division by zero");
  int df = f.degree(), dg = g.degree();
  if (df < dg) {
    // lc(g)^(df-dg+1) with nonpositive exponent: convention lc^0 * f for df < dg
    return f;
  }
  IntVec r(f.coeffs());
  const Int& lg = g.leading();
  for (int k = df; k >= dg; --k) {
    Int top = r[k];
    for (int j = 0; j <= k; ++j) r[j] *= lg;
    if (top != 0)
      for (int j = 0; j < dg; ++j) r[k - dg + j] -= top * g[j];
    r[k] = 0;
  }
  r.resize(dg);
  return IntPoly::from_coeffs(std::move(r));
}

bool divides(const IntPoly& g, const IntPoly& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  // Rational long division with exactness check.
  RatVec r;
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  int dg = g.degree();
  for (int k = int(r.size()) - 1; k >= dg; --k) {
    if (r[k] == 0) continue;
    Rat q = r[k] / Rat(g.leading());
    for (int j = 0; j <= dg; ++j) r[k - dg + j] -= q * Rat(g[j]);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

IntPoly divexact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("divexact: division by zero");
  if (f.is_zero()) return {};
  int df = f.degree(), dg = g.degree();
  if (df < dg) throw std::domain_error("divexact: not divisible");
  RatVec r;
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  RatVec q(size_t(df - dg) + 1);
  for (int k = df; k >= dg; --k) {
    if (r[k] == 0) continue;
    Rat qc = r[k] / Rat(g.leading());
    q[k - dg] = qc;
    for (int j = 0; j <= dg; ++j) r[k - dg + j] -= qc * Rat(g[j]);
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("divexact: not divisible");
  RatPoly quot = RatPoly::from_coeffs(std::move(q));
  if (!quot.is_integral()) throw std::domain_error("divexact: quotient not integral");
  return quot.to_int();
}

IntPoly gcd_subresultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw std::domain_error("gcd_subresultant: both arguments zero");
  if (f.is_zero()) return g.leading() < 0 ? -g : g;
  if (g.is_zero()) return f.leading() < 0 ? -f : f;

  Int ca = int_content(f), cb = int_content(g);
  Int d = gcd(ca, cb);
  IntPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);

  Int gg = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    IntPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly(d);
    a = b;
    // divide by g * h^delta, exactly
    Int div = gg;
    for (int i = 0; i < delta; ++i) div *= h;
    IntVec c;
    c.reserve(r.coeffs().size());
    for (const auto& x : r.coeffs()) {
      Int y;
      mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
      c.push_back(std::move(y));
    }
    b = IntPoly::from_coeffs(std::move(c));
    gg = a.leading();
    if (delta > 0) {
      Int num = gg;
      for (int i = 1; i < delta; ++i) num *= gg;
      Int den = 1;
      for (int i = 1; i < delta; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  IntPoly pp = primitive_part(b);
  return d * pp;
}

IntPoly poly_lcm(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  IntPoly l = divexact(f * g, gcd_subresultant(f, g));
  return l.leading() < 0 ? -l : l;
}

LaurentPoly star(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  IntVec rev(f.coeffs().coeffs().rbegin(), f.coeffs().coeffs().rend());
  return LaurentPoly(-(f.valuation() + f.coeffs().degree()), IntPoly::from_coeffs(std::move(rev)));
}

PalindromeClass palindromic_class(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("palindromic_class: zero polynomial");
  int val = f.valuation(), deg = f.degree();
  int k = val + deg;
  // v^k f(1/v) reverses the coefficient window [val, deg].
  bool pal = true, skew = true;
  for (int i = val; i <= deg; ++i) {
    const Int& a = f[i];
    const Int& b = f[val + deg - i];
    if (a != b) pal = false;
    if (a != -b) skew = false;
  }
  if (pal) return {PalindromeKind::Palindromic, k};
  if (skew) return {PalindromeKind::SkewPalindromic, k};
  return {PalindromeKind::Neither, 0};
}

bool is_palindromic(const IntPoly& f) {
  return !f.is_zero() && palindromic_class(f).kind == PalindromeKind::Palindromic;
}

}  // namespace wgram
