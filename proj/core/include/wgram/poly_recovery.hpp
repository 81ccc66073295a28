// Recovering rational-coefficient polynomials from evaluations at few small
// pairwise coprime places: Chinese remainder lifting of the constant term,
// rational recovery, then recursion on (f - z0)/X. Degree detection handles
// evaluations rescaled by unknown positive scalars from a finite pool, via
// the nearest-integer log-slope graphs.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wgram/poly.hpp"
#include "wgram/rational_recovery.hpp"

namespace wgram {

// Precomputed Chinese remainder basis for a fixed list of pairwise coprime
// moduli; reused across the many lifts sharing the same places.
class CrtContext {
 public:
  explicit CrtContext(std::vector<Int> moduli);  // throws on non-coprime moduli

  const Int& modulus() const { return product_; }
  size_t size() const { return moduli_.size(); }

  // Symmetric-range representative congruent to residues[j] mod moduli[j].
  Int lift(const std::vector<Int>& residues) const;

 private:
  std::vector<Int> moduli_;
  std::vector<Int> basis_;  // basis_j = 1 mod m_j, = 0 mod m_i (i != j)
  Int product_;
};

// One-shot CRT of (a_j mod b_j) pairs into a Residue mod prod b_j.
Residue crt_lift(const std::vector<std::pair<Int, Int>>& residues);

struct RecoveryPolicy {
  int degree_bound = 200;
  Int denominator_bound = 20;  // recovered denominators must divide this
  Int place_start = 2;         // first candidate place for the ascending schedule
};

enum class LiftError {
  None,
  DegreeBoundExceeded,
  DenominatorBoundExceeded,
  RecoveryFailure,   // shortest vector not below the norm bound: need more places
  UnusablePlaces,    // value denominators share factors with every place
};

struct EvalSample {
  Int place;  // |place| >= 2
  Rat value;  // f(place), possibly rescaled by an unknown positive scalar
};

// Lift engine for a fixed set of places. Values are supplied per entry, so
// matrix consumers reuse one lifter (and its CRT precomputation) across all
// their unknown polynomials.
class PolyLifter {
 public:
  PolyLifter(std::vector<Int> places, RecoveryPolicy policy);

  const std::vector<Int>& places() const { return places_; }

  std::optional<RatPoly> lift(const std::vector<Rat>& values, LiftError* why = nullptr) const;

 private:
  std::vector<Int> places_;
  RecoveryPolicy policy_;
  CrtContext crt_;
};

std::optional<RatPoly> lift_from_samples(const std::vector<EvalSample>& samples,
                                         const RecoveryPolicy& policy,
                                         LiftError* why = nullptr);

// Full driver: pulls places from the ascending prime schedule one at a time,
// verifies each candidate against the value at one additional place.
RatPoly recover_poly(const std::function<Rat(const Int&)>& evaluate,
                     const RecoveryPolicy& policy = {});

// ---- degree detection (rescaled values) ----

struct GammaComponent {
  long slope;                // the graph label d'
  std::vector<int> members;  // sample indices, ascending
  bool complete;             // component is a complete graph
};

// Nearest-integer log-slope d_ij for every pair, grouped into the graphs
// Gamma_{d'}; components returned for every occurring d'.
// Requires >= 2 samples, all values nonzero and of equal sign.
std::vector<GammaComponent> slope_components(const std::vector<EvalSample>& samples);

struct DegreeDetection {
  long degree;                   // d' of the chosen component
  std::vector<int> chosen;       // sample indices used for recovery
  RatPoly scaled;                // a * f for some positive rational a
};

// Chooses a maximal complete component (ties: smallest places), runs
// polynomial recovery with degree bound d' on its places; on recovery
// failure falls through to the next candidate. nullopt when no complete
// component of size >= 3 yields a lift (caller adds samples).
std::optional<DegreeDetection> detect_degree(const std::vector<EvalSample>& samples,
                                             const RecoveryPolicy& policy = {});

// Ascending pairwise-coprime places 2, 3, 5, 7, ... starting at `from`.
class AscendingPrimePlaces {
 public:
  explicit AscendingPrimePlaces(Int from = 2);
  Int next();

 private:
  Int next_;
};

// Batches of consecutive primes from a window [B, B*e^delta); B grows
// geometrically and the window shrinks, so batch scalars eventually tie.
class WindowedPrimePlaces {
 public:
  explicit WindowedPrimePlaces(Int start = 101, double window = 0.35);
  std::vector<Int> next_batch(int minimum = 3);

 private:
  Int base_;
  Int last_ = 1;  // batches never revisit earlier primes
  double window_;
};

}  // namespace wgram
