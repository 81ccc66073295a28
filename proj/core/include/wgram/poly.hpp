// Dense univariate polynomials over Z and Q, plus Laurent polynomials
// (a valuation offset times a Z-polynomial). Coefficient lists ascending;
// the zero polynomial is the empty list. All heavy lifting is delegated to
// integer linear algebra elsewhere, so the arithmetic here is deliberately
// plain: schoolbook multiplication, Horner evaluation, denominator-free
// pseudo-division, and Collins's sub-resultant gcd without intermediate
// primitivisation.

#pragma once

#include <string>
#include <vector>

#include "wgram/numeric.hpp"

namespace wgram {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(Int constant);
  static IntPoly from_coeffs(IntVec coeffs);  // trims trailing zeros
  static IntPoly monomial(Int coeff, int exp);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  // Largest power of X dividing the polynomial (0 for the zero polynomial).
  int valuation() const;
  const Int& leading() const;
  const Int& operator[](int i) const;  // 0 outside the stored range
  const IntVec& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const = default;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& a, const IntPoly& b);
  IntPoly shifted(int k) const;  // * X^k, k >= 0

  Int operator()(const Int& x) const;  // Horner
  Rat operator()(const Rat& x) const;

  std::string str() const;                       // "c0,c1,..." ("0" for zero)
  static IntPoly parse(const std::string& s);

 private:
  IntVec c_;
  void trim();
};

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(const IntPoly& p);
  static RatPoly from_coeffs(RatVec coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  const Rat& operator[](int i) const;
  const RatVec& coeffs() const { return c_; }

  bool operator==(const RatPoly& o) const = default;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  Rat operator()(const Rat& x) const;

  bool is_integral() const;
  IntPoly to_int() const;  // requires is_integral
  std::string str() const;

 private:
  RatVec c_;
  void trim();
};

// X^valuation * coeffs, with the coefficient list having a nonzero constant
// term whenever it is nonzero (the valuation is maximal).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int valuation, IntPoly coeffs);
  explicit LaurentPoly(const IntPoly& p) : LaurentPoly(0, p) {}
  static LaurentPoly monomial(Int coeff, int exp);

  bool is_zero() const { return c_.is_zero(); }
  int valuation() const { return val_; }
  const IntPoly& coeffs() const { return c_; }
  int degree() const { return val_ + c_.degree(); }  // top exponent

  bool operator==(const LaurentPoly& o) const = default;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  Rat operator()(const Rat& x) const;  // x != 0 when valuation < 0

  std::string str() const;  // "d:c0,c1,..." (prefix omitted when d == 0)
  static LaurentPoly parse(const std::string& s);

 private:
  int val_ = 0;
  IntPoly c_;
};

// f = content * primitive with gcd(primitive) = 1 and positive leading
// coefficient on the primitive part (the content carries the sign).
// Throws std::domain_error on zero input.
struct ContentSplit {
  Rat content;
  IntPoly primitive;
};
ContentSplit content_and_primitive(const IntPoly& f);
ContentSplit content_and_primitive(const RatPoly& f);

// Integer content (positive); 0 for the zero polynomial.
Int int_content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);  // positive leading coefficient

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r, deg r < deg g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

// Exact division; throws std::domain_error if g does not divide f.
IntPoly divexact(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

// Sub-resultant gcd (denominator-free pseudo-division, no intermediate
// primitivisation); positive leading coefficient.
IntPoly gcd_subresultant(const IntPoly& f, const IntPoly& g);
IntPoly poly_lcm(const IntPoly& f, const IntPoly& g);

// The involution v -> v^{-1}.
LaurentPoly star(const LaurentPoly& f);

enum class PalindromeKind { Palindromic, SkewPalindromic, Neither };
struct PalindromeClass {
  PalindromeKind kind;
  int exponent;  // k = valuation + degree; meaningful unless Neither
};
// Tests v^k * f(v^{-1}) = +-f for f in Z[v]; throws on zero input.
PalindromeClass palindromic_class(const IntPoly& f);
bool is_palindromic(const IntPoly& f);

}  // namespace wgram
