// Nullspace, inverse, exponent, and product of matrices over Z[X] by
// specialize -> solve over Z -> Chinese-remainder lift. Specializations that
// drop rank or turn singular are recorded as bad places and excluded; the
// unknown per-place rescaling (the gcd the integer solver strips) is
// absorbed by degree detection over the log-slope graphs. Every returned
// object has passed its exact residual check.

#pragma once

#include <functional>

#include "wgram/poly_matrix.hpp"
#include "wgram/poly_recovery.hpp"

namespace wgram {

struct LiftOptions {
  RecoveryPolicy policy{.degree_bound = 200, .denominator_bound = 20, .place_start = 2};
  Int detect_start = 101;        // windowed schedule start for rescaled solves
  std::uint32_t prime = 251;     // first prime of the p-adic layer schedule
  int jobs = 1;                  // per-place solves may run concurrently
  int max_rounds = 24;
  // Only the most recent solves feed detection and lifting: the place window
  // moves up, so early places whose log-slopes are still pre-asymptotic age
  // out instead of poisoning component completeness forever.
  int sample_window = 16;
};

// Primitive kernel vector of a matrix with rank-1 row kernel over Q[X];
// v * A = 0 verified exactly before returning. The rank condition is checked
// implicitly: specializations with kernel rank != 1 are discarded, and a
// matrix whose kernel is 0 or has rank > 1 exhausts the place budget.
std::vector<IntPoly> poly_nullspace_rank1(const PolyMatrix& a, const LiftOptions& opt = {});

struct PolyInverse {
  PolyMatrix basis;  // B, primitive jointly with scale
  IntPoly scale;     // c, positive leading coefficient; B*A = c*I exactly
};

// Throws std::domain_error on singular input (persistent singular
// specializations).
PolyInverse poly_inverse(const PolyMatrix& a, const LiftOptions& opt = {});

// Primitive part of the inverse scale: generator of the annihilator of
// Q[X]^n / im(A), positive leading coefficient.
IntPoly poly_exponent(const PolyMatrix& a, const LiftOptions& opt = {});

struct MatmulOptions {
  // Per-entry acceptance test for lifted candidates (degree bounds,
  // palindromicity, ...); rejection sends the entry back for more places.
  std::function<bool(int row, int col, const IntPoly&)> entry_check;
  // Restrict lifting to selected entries (e.g. the lower triangle); others
  // are left zero for the caller to fill.
  std::function<bool(int row, int col)> select;
  LiftOptions lift;
};

// Product A*B from specialized integer products plus coefficient recovery
// (no rescaling involved, hence no degree detection). Each accepted entry
// matches the specialized product at one place not used in its lift; full
// correctness certification is the consumer's job.
PolyMatrix poly_matmul_lifted(const PolyMatrix& a, const PolyMatrix& b,
                              const MatmulOptions& opt = {});

}  // namespace wgram
