#include "wgram/polyring_linear.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>

namespace wgram {
namespace {

// f(i) must not throw; results keep index order regardless of jobs.
template <class T, class F>
std::vector<T> parallel_map(int jobs, int n, F&& f) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<T>> futs;
  futs.reserve(n);
  for (int i = 0; i < n; ++i) futs.push_back(std::async(std::launch::async, f, i));
  for (int i = 0; i < n; ++i) out[i] = futs[i].get();
  return out;
}

std::vector<IntPoly> primitivize_joint(const std::vector<RatPoly>& v) {
  Int den = 1;
  for (const auto& p : v)
    for (const auto& q : p.coeffs()) den = lcm(den, Int(q.get_den()));
  std::vector<IntPoly> out;
  out.reserve(v.size());
  for (const auto& p : v) {
    IntVec c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(Int(q.get_num()) * (den / Int(q.get_den())));
    out.push_back(IntPoly::from_coeffs(std::move(c)));
  }
  IntPoly g;
  for (const auto& p : out) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? (p.leading() < 0 ? -p : p) : gcd_subresultant(g, p);
    if (g.degree() == 0 && g.leading() == 1) break;
  }
  if (g.is_zero()) throw std::domain_error("primitivize_joint: zero vector");
  if (!(g.degree() == 0 && g.leading() == 1))
    for (auto& p : out)
      if (!p.is_zero()) p = divexact(p, g);
  return out;
}

// Candidate components: complete, >= 3 members, largest first, ties toward
// the smallest places.
std::vector<GammaComponent> ranked_candidates(const std::vector<EvalSample>& samples) {
  auto comps = slope_components(samples);
  std::vector<GammaComponent> cands;
  for (auto& c : comps)
    if (c.complete && c.members.size() >= 3 && c.slope >= 0) cands.push_back(std::move(c));
  std::sort(cands.begin(), cands.end(), [&](const GammaComponent& a, const GammaComponent& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    for (size_t i = 0; i < a.members.size(); ++i) {
      const Int& pa = samples[a.members[i]].place;
      const Int& pb = samples[b.members[i]].place;
      if (pa != pb) return pa < pb;
    }
    return a.slope < b.slope;
  });
  return cands;
}

}  // namespace

std::vector<IntPoly> poly_nullspace_rank1(const PolyMatrix& a, const LiftOptions& opt) {
  const int m = a.rows();
  WindowedPrimePlaces schedule(opt.detect_start);
  std::vector<Int> places;
  std::vector<IntVec> kernels;  // primitive kernel of a(b), first nonzero entry positive

  for (int round = 0; round < opt.max_rounds; ++round) {
    std::vector<Int> batch = schedule.next_batch(3);
    auto solved = parallel_map<std::optional<IntVec>>(opt.jobs, int(batch.size()), [&](int i) {
      try {
        return std::optional<IntVec>(int_nullspace_rank1(a(batch[i]), opt.prime));
      } catch (const std::domain_error&) {
        return std::optional<IntVec>();  // rank drop at this place: discard
      }
    });
    for (size_t i = 0; i < batch.size(); ++i)
      if (solved[i]) {
        places.push_back(batch[i]);
        kernels.push_back(std::move(*solved[i]));
      }
    if (int(places.size()) > opt.sample_window) {
      int drop = int(places.size()) - opt.sample_window;
      places.erase(places.begin(), places.begin() + drop);
      kernels.erase(kernels.begin(), kernels.begin() + drop);
    }
    if (int(places.size()) < 3) continue;

    std::vector<EvalSample> samples;
    samples.reserve(places.size());
    for (size_t j = 0; j < places.size(); ++j) {
      Int s = 0;
      for (const auto& x : kernels[j]) s += x * x;
      samples.push_back({places[j], Rat(s)});
    }

    for (const auto& cand : ranked_candidates(samples)) {
      RecoveryPolicy pol = opt.policy;
      pol.degree_bound = int(std::min<long>(pol.degree_bound, cand.slope));
      std::vector<Int> sub_places;
      for (int idx : cand.members) sub_places.push_back(places[idx]);
      PolyLifter lifter(sub_places, pol);

      std::vector<RatPoly> lifted(m);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        std::vector<Rat> vals;
        vals.reserve(cand.members.size());
        for (int idx : cand.members) vals.emplace_back(kernels[idx][i]);
        auto r = lifter.lift(vals);
        if (!r)
          ok = false;
        else
          lifted[i] = std::move(*r);
      }
      if (!ok) continue;

      std::vector<IntPoly> v;
      try {
        v = primitivize_joint(lifted);
      } catch (const std::domain_error&) {
        continue;
      }
      for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.leading() < 0)
          for (auto& q : v) q = -q;
        break;
      }
      if (!std::all_of(v.begin(), v.end(), [](const IntPoly& p) { return p.is_zero(); })) {
        auto residual = mul(v, a);
        bool zero = std::all_of(residual.begin(), residual.end(),
                                [](const IntPoly& p) { return p.is_zero(); });
        if (zero) return v;
      }
    }
  }
  throw std::runtime_error(
      "poly_nullspace_rank1: place budget exhausted (is the kernel rank 1?)");
}

namespace {

struct InverseSolve {
  Int place;
  IntMatrix basis;
  Int scale;
};

}  // namespace

PolyInverse poly_inverse(const PolyMatrix& a, const LiftOptions& opt) {
  if (a.rows() != a.cols()) throw std::domain_error("poly_inverse: not square");
  const int n = a.rows();
  WindowedPrimePlaces schedule(opt.detect_start);
  std::vector<InverseSolve> solves;
  int singular_places = 0;

  for (int round = 0; round < opt.max_rounds; ++round) {
    std::vector<Int> batch = schedule.next_batch(3);
    auto solved =
        parallel_map<std::optional<InverseSolve>>(opt.jobs, int(batch.size()), [&](int i) {
          try {
            IntInverse inv = int_inverse(a(batch[i]), opt.prime);
            return std::optional<InverseSolve>(
                InverseSolve{batch[i], std::move(inv.basis), std::move(inv.scale)});
          } catch (const std::domain_error&) {
            return std::optional<InverseSolve>();  // singular specialization: skip
          }
        });
    for (size_t i = 0; i < batch.size(); ++i) {
      if (solved[i])
        solves.push_back(std::move(*solved[i]));
      else
        ++singular_places;
    }
    if (singular_places >= 10 && solves.empty())
      throw std::domain_error("poly_inverse: singular matrix");
    if (int(solves.size()) > opt.sample_window)
      solves.erase(solves.begin(), solves.end() - opt.sample_window);
    if (int(solves.size()) < 3) continue;

    std::vector<EvalSample> samples;
    samples.reserve(solves.size());
    for (const auto& s : solves) {
      Int acc = s.scale * s.scale;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += s.basis.at(i, j) * s.basis.at(i, j);
      samples.push_back({s.place, Rat(acc)});
    }

    for (const auto& cand : ranked_candidates(samples)) {
      RecoveryPolicy pol = opt.policy;
      pol.degree_bound = int(std::min<long>(pol.degree_bound, cand.slope));
      std::vector<Int> sub_places;
      for (int idx : cand.members) sub_places.push_back(solves[idx].place);
      PolyLifter lifter(sub_places, pol);

      auto lift_values = [&](auto&& get) -> std::optional<RatPoly> {
        std::vector<Rat> vals;
        vals.reserve(cand.members.size());
        for (int idx : cand.members) vals.emplace_back(get(solves[idx]));
        return lifter.lift(vals);
      };

      std::vector<RatPoly> lifted;  // n*n entries then the scale
      lifted.reserve(size_t(n) * n + 1);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          auto r = lift_values([&](const InverseSolve& s) { return Rat(s.basis.at(i, j)); });
          if (!r)
            ok = false;
          else
            lifted.push_back(std::move(*r));
        }
      if (ok) {
        auto r = lift_values([&](const InverseSolve& s) { return Rat(s.scale); });
        if (!r)
          ok = false;
        else
          lifted.push_back(std::move(*r));
      }
      if (!ok) continue;

      std::vector<IntPoly> prim;
      try {
        prim = primitivize_joint(lifted);
      } catch (const std::domain_error&) {
        continue;
      }
      IntPoly scale = prim.back();
      if (scale.is_zero()) continue;
      if (scale.leading() < 0)
        for (auto& p : prim) p = -p;
      PolyInverse result;
      result.scale = prim.back();
      result.basis = PolyMatrix(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) result.basis.at(i, j) = prim[size_t(i) * n + j];

      // Exact residual check: B*A = c*I.
      PolyMatrix prod = mul(result.basis, a);
      bool good = true;
      for (int i = 0; i < n && good; ++i)
        for (int j = 0; j < n && good; ++j)
          good = (i == j) ? (prod.at(i, j) == result.scale) : prod.at(i, j).is_zero();
      if (good) return result;
    }
  }
  throw std::runtime_error("poly_inverse: place budget exhausted");
}

IntPoly poly_exponent(const PolyMatrix& a, const LiftOptions& opt) {
  return primitive_part(poly_inverse(a, opt).scale);
}

PolyMatrix poly_matmul_lifted(const PolyMatrix& a, const PolyMatrix& b,
                              const MatmulOptions& opt) {
  if (a.cols() != b.rows()) throw std::domain_error("poly_matmul_lifted: dimension mismatch");
  PolyMatrix out(a.rows(), b.cols());

  std::vector<std::pair<int, int>> pending;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (!opt.select || opt.select(i, j)) pending.push_back({i, j});
  if (pending.empty()) return out;

  RecoveryPolicy pol = opt.lift.policy;
  pol.denominator_bound = 1;  // integer product of integer-polynomial matrices
  int deg_bound = (a.max_degree() < 0 || b.max_degree() < 0)
                      ? 0
                      : a.max_degree() + b.max_degree();
  pol.degree_bound = std::min(pol.degree_bound, deg_bound);

  AscendingPrimePlaces schedule(opt.lift.policy.place_start);
  std::vector<Int> places;
  std::vector<IntMatrix> prods;

  int rounds_left = pol.degree_bound + 64;
  while (!pending.empty()) {
    if (--rounds_left < 0)
      throw std::runtime_error("poly_matmul_lifted: place budget exhausted");
    Int p = schedule.next();
    places.push_back(p);
    prods.push_back(mul(a(p), b(p)));
    if (places.size() < 3) continue;

    std::vector<Int> lift_places(places.begin(), places.end() - 1);
    PolyLifter lifter(lift_places, pol);
    const IntMatrix& holdout = prods.back();
    const Int& holdout_place = places.back();

    auto attempt = [&](int k) -> std::optional<IntPoly> {
      auto [i, j] = pending[k];
      std::vector<Rat> vals;
      vals.reserve(prods.size() - 1);
      for (size_t t = 0; t + 1 < prods.size(); ++t) vals.emplace_back(prods[t].at(i, j));
      auto cand = lifter.lift(vals);
      if (!cand || !cand->is_integral()) return std::nullopt;
      IntPoly poly = cand->to_int();
      if (poly(holdout_place) != holdout.at(i, j)) return std::nullopt;
      if (opt.entry_check && !opt.entry_check(i, j, poly)) return std::nullopt;
      return poly;
    };
    auto results = parallel_map<std::optional<IntPoly>>(opt.lift.jobs, int(pending.size()),
                                                        [&](int k) { return attempt(k); });
    std::vector<std::pair<int, int>> still;
    for (size_t k = 0; k < pending.size(); ++k) {
      if (results[k])
        out.at(pending[k].first, pending[k].second) = std::move(*results[k]);
      else
        still.push_back(pending[k]);
    }
    pending = std::move(still);
  }
  return out;
}

}  // namespace wgram
