// Exact arithmetic substrate: arbitrary precision integers and reduced
// fractions (GMP), plus the handful of number-theoretic helpers the
// recovery and lifting layers keep reaching for.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgram {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Representative of a mod b in the symmetric range (-b/2, b/2], b > 0.
inline Int symmetric_mod(const Int& a, const Int& b) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());  // r in [0, b)
  if (2 * r > b) r -= b;
  return r;
}

// Inverse of a mod b; throws if not invertible.
inline Int mod_inverse(const Int& a, const Int& b) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return r;
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline Int next_prime_above(const Int& n) {
  Int p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// x = d * 2^exp with d in [0.5, 1); natural log good to ~1e-15 relative.
double log_of(const Int& x);
double log_of(const Rat& x);

// Prime schedule for the p-adic layer: 251 and the primes below 256 in
// descending order, then primes above 2^16 as a last resort.
class PrimeSchedule {
 public:
  explicit PrimeSchedule(std::uint32_t first = 251) : next_(first) {}
  std::uint32_t next();

 private:
  Int next_;
  bool small_phase_ = true;
};

}  // namespace wgram
