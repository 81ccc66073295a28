// Rational number recovery: reconstruct y/x from its congruence class
// a mod b via a shortest nonzero vector of the rank-2 lattice
//   L_{a,b} = <[1,a],[0,b]>  =  { [x,y] : y = a*x (mod b) }.
// When x^2 + y^2 < b the shortest vectors are exactly +-[x,y], so Gauss
// pair reduction with an early norm break recovers the fraction.

#pragma once

#include <optional>
#include <utility>

#include "wgram/numeric.hpp"

namespace wgram {

// Residue a mod b, reduced into the symmetric range (-b/2, b/2].
struct Residue {
  Int rep;
  Int modulus;  // >= 2

  Residue(Int a, Int b) : modulus(std::move(b)) {
    if (modulus < 2) throw std::domain_error("Residue: modulus must be >= 2");
    rep = symmetric_mod(a, modulus);
  }
};

struct LatticeBasis2 {
  std::pair<Int, Int> v1;
  std::pair<Int, Int> v2;

  static LatticeBasis2 congruence(const Int& a, const Int& b) {
    return LatticeBasis2{{1, a}, {0, b}};
  }
};

// Gauss reduction for rank-2 lattices, pair reduction with numerically
// smallest residues. Returns a lattice minimum, or the first vector found
// with squared norm < early_bound when that is given.
std::pair<Int, Int> gauss_reduce(LatticeBasis2 basis,
                                 const std::optional<Int>& early_bound = std::nullopt);

struct RecoveredRational {
  Int numerator;    // y
  Int denominator;  // x > 0, gcd(x, y) = 1, y = a*x (mod b)
};

// Shortest-vector recovery of y/x from r; nullopt when the vector found is
// imprimitive or its squared norm is not below r.modulus (caller retries
// with a larger modulus).
std::optional<RecoveredRational> recover_rational(const Residue& r);

}  // namespace wgram
