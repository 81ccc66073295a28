// End-to-end computation of primitive Gram matrices for W-graph
// representations: seed search, specialized Schreier tree, standard bases
// B and B' over Z[v], diagonal factorizations B = R * Btilde * C, the
// palindromicity-guided inverse and lifted product, primitivisation, and
// the exact final verification X(vT_s) P = P X(vT_s)^tr.

#pragma once

#include "wgram/hecke_wgraph.hpp"

namespace wgram {

struct GramStats {
  int max_degree = 0;
  Int max_abs_coeff;
  bool diagonal_at_zero = false;
  std::vector<Int> det_prime_divisors;  // primes dividing det(P|_{v->0}); empty for +-1

  std::string csv(const std::string& name) const;  // "name,deg,absval,diag,detprimes"
};

// B = R * core * C with R = diag(v^{d_i}), C = diag(column gcds); the core
// has primitive rows and columns.
struct FactoredBasis {
  std::vector<int> row_v_exponents;   // d_i
  std::vector<IntPoly> column_gcds;   // diagonal of C
  PolyMatrix core;
  bool columns_palindromic = true;    // consequence of the exponent
                                      // observations; checked, not assumed
};

// Throws std::domain_error when some row content is not a monomial v^d
// (the standard-basis derivation guarantees it, so a violation is a data
// error).
FactoredBasis factor_basis(const PolyMatrix& b);

struct PipelineOptions {
  LiftOptions lift;
  std::vector<Int> tree_places{1, 2, 3};  // specialization schedule for the tree
  unsigned spot_seed = 0;                 // offsets the verification spot place
  int retries = 3;
};

struct GramRun {
  PolyMatrix P;  // primitive symmetric Gram matrix, trace(P|_0) > 0
  int m_P = 0;   // even palindromic exponent = max entry degree
  GramStats stats;

  std::uint32_t jmask = 0;
  int seed_vertex = 0;
  SchreierTree tree;
  std::vector<int> lengths;  // l(w_i)
  Int tree_place;

  PolyMatrix B, Bdual;
  FactoredBasis fb, fb_dual;
  std::vector<IntPoly> dual_seed;  // u'_1
  IntPoly bhat_scale;              // the scale of the core inverse
  IntPoly q_gcd;                   // gcd(Q) stripped at primitivisation
  bool r_fallback = false;         // R' != R: diagonal reinserted, break relaxed
};

// J defaults to the smallest valid Benson-Curtis subset (by bitmask, i.e.
// lexicographically smallest generator list). Dimension-1 representations
// short-circuit to P = [1].
GramRun compute_gram(const WGraph& g, const CoxeterSystem& cox,
                     std::optional<std::uint32_t> jmask = std::nullopt,
                     const PipelineOptions& opt = {});

GramStats gram_stats(const PolyMatrix& p);

// det(P|_{v->0}) != 0: the balancedness criterion.
bool check_balanced(const PolyMatrix& p);

struct ObservationProbe {
  bool holds = true;
  bool fully_factored = true;  // exponent split into cyclotomic factors
  std::string detail;
};

struct DiagnosticsReport {
  ObservationProbe obs1;  // d_i <= l(w_i) + 1
  ObservationProbe obs2;  // irreducible divisors of exp(B) monic palindromic
  ObservationProbe obs3;  // d'_i = d_i
  ObservationProbe obs4;  // same for exp(B')
  std::string summary() const;
};

// Warn-level checks; never fatal. Computes exp(B) and exp(B') via the
// polynomial inverse, so this costs two extra inversions.
DiagnosticsReport diagnostics(const GramRun& run, const LiftOptions& opt = {});

}  // namespace wgram
