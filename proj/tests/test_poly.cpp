#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wgram/poly.hpp"

using namespace wgram;

TEST_CASE("evaluation") {
  // frozen value from the degree-detection example table (place 37)
  IntPoly f{1, 4, 8, 11, 12, 12, 12, 12, 12, 12, 11, 8, 4, 1};
  CHECK(f(Int(37)) == Int("271378870503231142344"));

  CHECK(IntPoly{}(Int(123)) == 0);
  CHECK((IntPoly{0, 0, 1})(Int(-3)) == 9);

  LaurentPoly l = LaurentPoly::monomial(1, -2);  // v^-2
  CHECK(l(Rat(2)) == Rat(1, 4));
  CHECK_THROWS_AS((void)l(Rat(0)), std::domain_error);
}

TEST_CASE("eval is multiplicative") {
  testutil::Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    IntPoly f = testutil::rand_poly(rng, 8, 50);
    IntPoly g = testutil::rand_poly(rng, 8, 50);
    Int b = testutil::rand_int(rng, -50, 50);
    CHECK((f * g)(b) == f(b) * g(b));
  }
}

TEST_CASE("content and primitive part") {
  auto s = content_and_primitive(IntPoly{4, 6});
  CHECK(s.content == Rat(2));
  CHECK(s.primitive == IntPoly{2, 3});

  auto t = content_and_primitive(IntPoly{-1, 1});
  CHECK(t.content == Rat(1));
  CHECK(t.primitive == IntPoly{-1, 1});

  RatPoly r = RatPoly::from_coeffs({Rat(3), Rat(0), Rat(3, 2)});
  auto u = content_and_primitive(r);
  CHECK(u.content == Rat(3, 2));
  CHECK(u.primitive == IntPoly{2, 0, 1});

  // sign carried by the content
  auto w = content_and_primitive(IntPoly{4, -6});
  CHECK(w.content == Rat(-2));
  CHECK(w.primitive == IntPoly{-2, 3});

  CHECK_THROWS_AS((void)content_and_primitive(IntPoly{}), std::domain_error);
}

TEST_CASE("subresultant gcd: frozen examples") {
  CHECK(gcd_subresultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
  CHECK(gcd_subresultant(IntPoly{-2, 4}, IntPoly{}) == IntPoly{-2, 4});
  CHECK(gcd_subresultant(IntPoly{}, IntPoly{2, -4}) == IntPoly{-2, 4});
  // X^4+X^3+X+1 = (X+1)^2 (X^2-X+1) and X^3-1 = (X-1)(X^2+X+1) are coprime
  // (the factorization oracle: X^3+1 carries X^2-X+1, not X^2+X+1).
  IntPoly f{1, 1, 0, 1, 1};
  IntPoly g{-1, 0, 0, 1};
  CHECK(gcd_subresultant(f, g) == IntPoly{1});
  CHECK(oracle::euclid_gcd(f, g) == IntPoly{1});
  // a pair genuinely sharing X^2+X+1
  IntPoly h = IntPoly{1, 1, 1} * IntPoly{2, 0, 1};
  CHECK(gcd_subresultant(h, g) == IntPoly{1, 1, 1});
}

TEST_CASE("subresultant gcd agrees with rational Euclid and divides exactly") {
  testutil::Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    IntPoly a = testutil::rand_poly(rng, 6, 20);
    IntPoly b = testutil::rand_poly(rng, 6, 20);
    IntPoly c = testutil::rand_poly(rng, 4, 10);
    IntPoly f = a * c, g = b * c;
    if (f.is_zero() && g.is_zero()) continue;
    IntPoly got = gcd_subresultant(f, g);
    CHECK(!got.is_zero());
    CHECK(got.leading() > 0);
    if (!f.is_zero()) CHECK(divides(got, f));
    if (!g.is_zero()) CHECK(divides(got, g));
    if (!f.is_zero() && !g.is_zero()) {
      IntPoly want = oracle::euclid_gcd(f, g);
      Int cf = gcd(int_content(f), int_content(g));
      CHECK(got == cf * want);
    }
  }
}

TEST_CASE("star involution") {
  LaurentPoly v2 = LaurentPoly::monomial(1, 2);
  CHECK(star(v2) == LaurentPoly::monomial(1, -2));

  LaurentPoly sym = LaurentPoly(-1, IntPoly{1, 0, 1});  // v + v^-1
  CHECK(star(sym) == sym);

  LaurentPoly pal(0, IntPoly{1, 0, 3, 0, 3, 0, 1});  // v^6+3v^4+3v^2+1
  CHECK(star(pal) == LaurentPoly(-6, IntPoly{1, 0, 3, 0, 3, 0, 1}));
}

TEST_CASE("star is a ring involution") {
  testutil::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly f(int(rng() % 7) - 3, testutil::rand_poly(rng, 5, 9));
    LaurentPoly g(int(rng() % 7) - 3, testutil::rand_poly(rng, 5, 9));
    CHECK(star(star(f)) == f);
    CHECK(star(f + g) == star(f) + star(g));
    CHECK(star(f * g) == star(f) * star(g));
  }
}

TEST_CASE("palindromic classification") {
  CHECK(palindromic_class(IntPoly{1}).kind == PalindromeKind::Palindromic);
  CHECK(palindromic_class(IntPoly{1}).exponent == 0);

  auto skew = palindromic_class(IntPoly{-1, 1});  // v - 1
  CHECK(skew.kind == PalindromeKind::SkewPalindromic);
  CHECK(skew.exponent == 1);

  auto pal = palindromic_class(IntPoly{1, 0, 3, 0, 3, 0, 1});
  CHECK(pal.kind == PalindromeKind::Palindromic);
  CHECK(pal.exponent == 6);

  CHECK(palindromic_class(IntPoly{1, 2, 3}).kind == PalindromeKind::Neither);
  CHECK_THROWS_AS((void)palindromic_class(IntPoly{}), std::domain_error);
}

TEST_CASE("palindromic exponent parity forces divisibility") {
  // Palindromic(k) with k odd implies (v+1) | f; skew implies (v-1) | f.
  testutil::Rng rng(47);
  for (int t = 0; t < 400; ++t) {
    IntPoly f = testutil::rand_poly(rng, 9, 6);
    if (f.is_zero()) continue;
    auto c = palindromic_class(f);
    if (c.kind == PalindromeKind::Palindromic && c.exponent % 2 == 1)
      CHECK(divides(IntPoly{1, 1}, f));
    if (c.kind == PalindromeKind::SkewPalindromic) CHECK(divides(IntPoly{-1, 1}, f));
  }
}

TEST_CASE("text round trip") {
  IntPoly f{1, 4, 8};
  CHECK(f.str() == "1,4,8");
  CHECK(IntPoly::parse("1,4,8") == f);
  CHECK(IntPoly::parse("0").is_zero());

  LaurentPoly l(-2, IntPoly{3, 0, 1});
  CHECK(l.str() == "-2:3,0,1");
  CHECK(LaurentPoly::parse("-2:3,0,1") == l);
  CHECK(LaurentPoly::parse("5").coeffs() == IntPoly{5});
}
