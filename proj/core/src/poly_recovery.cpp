#include "wgram/poly_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgram {

CrtContext::CrtContext(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::domain_error("CrtContext: no moduli");
  product_ = 1;
  for (auto& m : moduli_) {
    if (m < 0) m = -m;
    if (m < 2) throw std::domain_error("CrtContext: modulus < 2");
    if (gcd(product_, m) != 1) throw std::domain_error("CrtContext: moduli not coprime");
    product_ *= m;
  }
  basis_.reserve(moduli_.size());
  for (const auto& m : moduli_) {
    Int big = product_ / m;
    basis_.push_back(big * mod_inverse(big % m, m) % product_);
  }
}

Int CrtContext::lift(const std::vector<Int>& residues) const {
  if (residues.size() != moduli_.size()) throw std::domain_error("CrtContext: residue count");
  Int acc = 0;
  for (size_t j = 0; j < residues.size(); ++j) acc += residues[j] * basis_[j];
  return symmetric_mod(acc, product_);
}

Residue crt_lift(const std::vector<std::pair<Int, Int>>& residues) {
  std::vector<Int> moduli, reps;
  moduli.reserve(residues.size());
  reps.reserve(residues.size());
  for (const auto& [a, b] : residues) {
    moduli.push_back(b);
    reps.push_back(a);
  }
  CrtContext ctx(moduli);
  return Residue(ctx.lift(reps), ctx.modulus());
}

PolyLifter::PolyLifter(std::vector<Int> places, RecoveryPolicy policy)
    : places_(std::move(places)), policy_(policy), crt_(places_) {}

std::optional<RatPoly> PolyLifter::lift(const std::vector<Rat>& values, LiftError* why) const {
  auto fail = [&](LiftError e) {
    if (why) *why = e;
    return std::nullopt;
  };
  if (why) *why = LiftError::None;
  const size_t k = places_.size();
  if (values.size() != k) throw std::domain_error("PolyLifter: value count");

  std::vector<Rat> v = values;
  std::vector<Int> residues(k);
  RatVec coeffs;
  for (int t = 0;; ++t) {
    bool all_zero = true;
    for (const auto& x : v)
      if (x != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      coeffs.resize(size_t(std::max(t, 0)));
      return RatPoly::from_coeffs(std::move(coeffs));
    }
    if (t > policy_.degree_bound) return fail(LiftError::DegreeBoundExceeded);

    for (size_t j = 0; j < k; ++j) {
      Int b = places_[j] < 0 ? Int(-places_[j]) : places_[j];
      Int den(v[j].get_den());
      if (gcd(den, b) != 1) return fail(LiftError::UnusablePlaces);
      residues[j] = Int(v[j].get_num()) * mod_inverse(den % b, b) % b;
    }
    Int lifted = crt_.lift(residues);
    auto rec = recover_rational(Residue(lifted, crt_.modulus()));
    if (!rec) return fail(LiftError::RecoveryFailure);
    if (!mpz_divisible_p(policy_.denominator_bound.get_mpz_t(), rec->denominator.get_mpz_t()))
      return fail(LiftError::DenominatorBoundExceeded);
    Rat z = make_rat(rec->numerator, rec->denominator);
    coeffs.push_back(z);
    for (size_t j = 0; j < k; ++j) v[j] = (v[j] - z) / Rat(places_[j]);
  }
}

std::optional<RatPoly> lift_from_samples(const std::vector<EvalSample>& samples,
                                         const RecoveryPolicy& policy, LiftError* why) {
  std::vector<Int> places;
  std::vector<Rat> values;
  places.reserve(samples.size());
  values.reserve(samples.size());
  for (const auto& s : samples) {
    places.push_back(s.place);
    values.push_back(s.value);
  }
  return PolyLifter(std::move(places), policy).lift(values, why);
}

AscendingPrimePlaces::AscendingPrimePlaces(Int from) : next_(std::move(from)) {
  if (next_ < 2) next_ = 2;
}

Int AscendingPrimePlaces::next() {
  Int p = next_;
  while (!is_probable_prime(p)) ++p;
  next_ = p + 1;
  return p;
}

WindowedPrimePlaces::WindowedPrimePlaces(Int start, double window)
    : base_(std::move(start)), window_(window) {}

std::vector<Int> WindowedPrimePlaces::next_batch(int minimum) {
  std::vector<Int> out;
  if (base_ <= last_) base_ = last_ + 1;
  double top = log_of(base_) + window_;
  Int p = base_ - 1;
  while (true) {
    p = next_prime_above(p);
    if (int(out.size()) >= minimum && log_of(p) >= top) break;
    out.push_back(p);
  }
  last_ = out.back();
  base_ = base_ + base_ / 2;  // * 1.5
  window_ *= 0.85;
  if (window_ < 0.02) window_ = 0.02;
  return out;
}

RatPoly recover_poly(const std::function<Rat(const Int&)>& evaluate,
                     const RecoveryPolicy& policy) {
  AscendingPrimePlaces schedule(policy.place_start);
  std::vector<EvalSample> samples;
  // One place is degenerate for CRT-based recovery; start with two.
  for (int i = 0; i < 2; ++i) {
    Int b = schedule.next();
    samples.push_back({b, evaluate(b)});
  }
  while (true) {
    auto cand = lift_from_samples(samples, policy);
    if (!cand) {
      // A place sharing a factor with a coefficient denominator corrupts the
      // congruences; the true denominators divide the bound, so retry on the
      // subset of places coprime to it.
      std::vector<EvalSample> safe;
      for (const auto& s : samples)
        if (gcd(s.place, policy.denominator_bound) == 1) safe.push_back(s);
      if (safe.size() >= 2 && safe.size() != samples.size())
        cand = lift_from_samples(safe, policy);
    }
    Int fresh = schedule.next();
    Rat fresh_value = evaluate(fresh);
    if (cand) {
      // Independent verification at a place not used in the lift.
      if ((*cand)(Rat(fresh)) == fresh_value) return *cand;
    }
    samples.push_back({fresh, fresh_value});
    if (int(samples.size()) > policy.degree_bound + 64)
      throw std::runtime_error("recover_poly: no stable candidate within the place budget");
  }
}

namespace {

// Nearest integer to the log-slope between samples i and j, with an exact
// big-rational comparison when the floating point value sits within 1e-6 of
// a half-integer boundary.
long slope_nearest(const EvalSample& lo, const EvalSample& hi) {
  double num = log_of(abs(hi.value)) - log_of(abs(lo.value));
  double den = log_of(hi.place) - log_of(lo.place);
  double x = num / den;
  double shifted = x + 0.5;
  double rounded = std::floor(shifted);
  long n = long(rounded);
  if (std::abs(shifted - std::round(shifted)) < 1e-6) {
    // Borderline: x ~ m - 1/2 for m near n (or n+1). Decide x >= m - 1/2
    // exactly via (v_hi/v_lo)^2 >= (b_hi/b_lo)^(2m-1).
    long m = std::llround(shifted);
    Rat vr = abs(hi.value) / abs(lo.value);
    Rat lhs = vr * vr;
    Rat br = Rat(abs(hi.place)) / Rat(abs(lo.place));
    Rat rhs(1);
    for (long i = 0; i < 2 * m - 1; ++i) rhs *= br;  // m >= 1 in borderline cases of interest
    if (2 * m - 1 < 0) {
      rhs = 1;
      for (long i = 0; i < -(2 * m - 1); ++i) rhs *= br;
      rhs = 1 / rhs;
    }
    n = (lhs >= rhs) ? m : m - 1;
  }
  return n;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<GammaComponent> slope_components(const std::vector<EvalSample>& samples) {
  const int k = int(samples.size());
  if (k < 2) throw std::domain_error("slope_components: need at least 2 samples");
  int sign = 0;
  for (const auto& s : samples) {
    if (s.value == 0) throw std::domain_error("slope_components: zero value (larger places needed)");
    int sg = sgn(s.value) > 0 ? 1 : -1;
    if (sign == 0) sign = sg;
    if (sg != sign)
      throw std::domain_error("slope_components: mixed signs (larger places needed)");
  }
  // order samples by |place| for slope orientation
  std::map<long, std::vector<std::pair<int, int>>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const EvalSample *lo = &samples[i], *hi = &samples[j];
      int a = i, b = j;
      if (abs(hi->place) == abs(lo->place))
        throw std::domain_error("slope_components: repeated place");
      if (abs(hi->place) < abs(lo->place)) {
        std::swap(lo, hi);
        std::swap(a, b);
      }
      edges[slope_nearest(*lo, *hi)].push_back({a, b});
    }
  std::vector<GammaComponent> out;
  for (const auto& [d, es] : edges) {
    UnionFind uf(k);
    for (auto [a, b] : es) uf.unite(a, b);
    std::map<int, std::vector<int>> comps;
    std::map<int, int> edge_count;
    for (int i = 0; i < k; ++i) comps[uf.find(i)].push_back(i);
    for (auto [a, b] : es) edge_count[uf.find(a)]++;
    for (auto& [root, members] : comps) {
      if (members.size() < 2) continue;  // isolated vertices are not part of Gamma_d
      int need = int(members.size() * (members.size() - 1) / 2);
      out.push_back({d, members, edge_count[root] == need});
    }
  }
  return out;
}

std::optional<DegreeDetection> detect_degree(const std::vector<EvalSample>& samples,
                                             const RecoveryPolicy& policy) {
  auto comps = slope_components(samples);
  std::vector<const GammaComponent*> candidates;
  for (const auto& c : comps)
    if (c.complete && c.members.size() >= 3) candidates.push_back(&c);
  std::sort(candidates.begin(), candidates.end(),
            [&](const GammaComponent* a, const GammaComponent* b) {
              if (a->members.size() != b->members.size())
                return a->members.size() > b->members.size();
              // tie: prefer the component whose places are smallest
              for (size_t i = 0; i < a->members.size(); ++i) {
                const Int pa = abs(samples[a->members[i]].place);
                const Int pb = abs(samples[b->members[i]].place);
                if (pa != pb) return pa < pb;
              }
              return a->slope < b->slope;
            });
  for (const auto* c : candidates) {
    std::vector<EvalSample> chosen;
    for (int idx : c->members) chosen.push_back(samples[idx]);
    RecoveryPolicy local = policy;
    local.degree_bound = int(c->slope < 0 ? 0 : c->slope);
    auto lifted = lift_from_samples(chosen, local);
    if (!lifted) continue;
    if (lifted->degree() != c->slope) continue;  // slope and lift must agree
    return DegreeDetection{c->slope, c->members, std::move(*lifted)};
  }
  return std::nullopt;
}

}  // namespace wgram
