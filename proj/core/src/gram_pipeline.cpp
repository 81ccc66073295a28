#include "wgram/gram_pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgram {

std::string GramStats::csv(const std::string& name) const {
  std::ostringstream os;
  os << name << ',' << max_degree << ',' << max_abs_coeff.get_str() << ','
     << (diagonal_at_zero ? 'y' : 'n') << ',';
  for (size_t i = 0; i < det_prime_divisors.size(); ++i) {
    if (i) os << ' ';
    os << det_prime_divisors[i].get_str();
  }
  return os.str();
}

FactoredBasis factor_basis(const PolyMatrix& b) {
  const int n = b.rows();
  FactoredBasis f;
  f.row_v_exponents.resize(n);
  f.core = b;
  for (int i = 0; i < n; ++i) {
    IntPoly g;
    for (int j = 0; j < b.cols(); ++j) {
      const IntPoly& e = b.at(i, j);
      if (e.is_zero()) continue;
      g = g.is_zero() ? (e.leading() < 0 ? -e : e) : gcd_subresultant(g, e);
    }
    if (g.is_zero()) throw std::domain_error("factor_basis: zero row");
    int d = g.valuation();
    if (!(g == IntPoly::monomial(1, d)))
      throw std::domain_error("factor_basis: row content is not a power of v");
    f.row_v_exponents[i] = d;
    if (d > 0)
      for (int j = 0; j < b.cols(); ++j) {
        if (f.core.at(i, j).is_zero()) continue;
        f.core.at(i, j) = divexact(f.core.at(i, j), IntPoly::monomial(1, d));
      }
  }
  f.column_gcds.resize(b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    IntPoly g;
    for (int i = 0; i < n; ++i) {
      const IntPoly& e = f.core.at(i, j);
      if (e.is_zero()) continue;
      g = g.is_zero() ? (e.leading() < 0 ? -e : e) : gcd_subresultant(g, e);
      if (g.degree() == 0 && g.leading() == 1) break;
    }
    if (g.is_zero()) throw std::domain_error("factor_basis: zero column");
    f.column_gcds[j] = g;
    if (!(g.degree() == 0 && g.leading() == 1)) {
      for (int i = 0; i < n; ++i) {
        if (f.core.at(i, j).is_zero()) continue;
        f.core.at(i, j) = divexact(f.core.at(i, j), g);
      }
      if (!is_palindromic(g)) f.columns_palindromic = false;
    }
  }
  return f;
}

namespace {

// v^m u^* = u with m even: the coefficient window [0, m] of every entry
// reads the same in both directions.
bool vector_palindromic_even(const std::vector<IntPoly>& u, int* exponent) {
  int m = -1;
  for (const auto& p : u) m = std::max(m, p.degree());
  if (m < 0) return false;
  for (const auto& p : u)
    for (int j = 0; j <= m; ++j)
      if (!(p[j] == p[m - j])) return false;
  if (exponent) *exponent = m;
  return m % 2 == 0;
}

bool matrix_palindromic_even(const PolyMatrix& p, int* exponent) {
  int m = p.max_degree();
  if (m < 0) return false;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      const IntPoly& e = p.at(i, j);
      for (int k = 0; k <= m; ++k)
        if (!(e[k] == e[m - k])) return false;
    }
  if (exponent) *exponent = m;
  return m % 2 == 0;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; p = next_prime_above(p)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

IntMatrix eval_at_zero(const PolyMatrix& p) {
  IntMatrix m(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) m.at(i, j) = p.at(i, j)[0];
  return m;
}

struct PipelineFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GramRun run_once(const WGraph& g, std::uint32_t jmask, int seed_vertex,
                 const PipelineOptions& opt, int attempt) {
  GramRun run;
  run.jmask = jmask;
  run.seed_vertex = seed_vertex;
  const int d = g.dimension();

  LiftOptions lift = opt.lift;
  // Retries shift the detection window so a fresh attempt sees fresh places.
  for (int t = 0; t < attempt; ++t) lift.detect_start = lift.detect_start * 3 / 2 + 7;

  // Specialized Schreier tree: first place whose standard basis spans.
  bool have_tree = false;
  for (const auto& b : opt.tree_places) {
    try {
      run.tree = specialized_schreier_tree(g, jmask, b, lift.prime);
      run.tree_place = b;
      have_tree = true;
      break;
    } catch (const std::domain_error&) {
    }
  }
  if (!have_tree) throw PipelineFailure("no tree place spans (is the action irreducible?)");
  run.lengths = run.tree.depths();

  auto gens = rep_generators(g);
  auto duals = dual_generators(g);

  std::vector<IntPoly> seed(d);
  seed[seed_vertex] = IntPoly{1};
  run.B = replay_schreier(run.tree, seed, gens);

  run.dual_seed = poly_nullspace_rank1(distinguished_action(g, jmask), lift);
  int dual_seed_exp = 0;
  if (!vector_palindromic_even(run.dual_seed, &dual_seed_exp))
    throw std::domain_error(
        "compute_gram: dual seed is not evenly palindromic (bad W-graph data)");
  run.Bdual = replay_schreier(run.tree, run.dual_seed, duals);

  run.fb = factor_basis(run.B);
  run.fb_dual = factor_basis(run.Bdual);
  run.r_fallback = run.fb.row_v_exponents != run.fb_dual.row_v_exponents;

  // chat = lcm of the column gcds of B; Chat = diag(chat / c_k).
  IntPoly chat{1};
  for (const auto& c : run.fb.column_gcds) chat = poly_lcm(chat, c);
  std::vector<IntPoly> chat_diag(d);
  for (int j = 0; j < d; ++j) chat_diag[j] = divexact(chat, run.fb.column_gcds[j]);

  PolyInverse core_inv = poly_inverse(run.fb.core, lift);
  run.bhat_scale = core_inv.scale;

  // Right factor: reinsert R^{-1} R' as nonnegative v-powers when R' != R
  // (the dropped global v-power dissolves in the final primitivisation).
  PolyMatrix right = run.fb_dual.core;
  bool palindromic_break = run.fb.columns_palindromic && run.fb_dual.columns_palindromic &&
                           !run.r_fallback;
  if (run.r_fallback) {
    int shift_min = 0;
    for (int i = 0; i < d; ++i)
      shift_min = std::min(shift_min, run.fb_dual.row_v_exponents[i] - run.fb.row_v_exponents[i]);
    for (int i = 0; i < d; ++i) {
      int e = run.fb_dual.row_v_exponents[i] - run.fb.row_v_exponents[i] - shift_min;
      if (e == 0) continue;
      for (int j = 0; j < d; ++j) right.at(i, j) = right.at(i, j).shifted(e);
    }
  }

  MatmulOptions mopt;
  mopt.lift = lift;
  mopt.select = [](int i, int j) { return j <= i; };  // the product is symmetric up to
                                                      // the diagonal scalings
  int deg_bound = core_inv.basis.max_degree() + right.max_degree();
  mopt.entry_check = [&, deg_bound](int, int, const IntPoly& cand) {
    if (cand.degree() > deg_bound) return false;
    if (palindromic_break && !cand.is_zero() &&
        palindromic_class(cand).kind != PalindromeKind::Palindromic)
      return false;
    return true;
  };
  PolyMatrix inner = poly_matmul_lifted(core_inv.basis, right, mopt);

  // Q = Chat * inner * C', lower triangle; the upper half mirrors it.
  PolyMatrix q(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      q.at(i, j) = chat_diag[i] * inner.at(i, j) * run.fb_dual.column_gcds[j];
      if (j < i) q.at(j, i) = q.at(i, j);
    }

  run.q_gcd = matrix_gcd(q);
  if (run.q_gcd.is_zero()) throw PipelineFailure("zero product");
  PolyMatrix p = q;
  if (!(run.q_gcd.degree() == 0 && run.q_gcd.leading() == 1))
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!p.at(i, j).is_zero()) p.at(i, j) = divexact(p.at(i, j), run.q_gcd);

  // Global sign: positive trace at v -> 0, falling back to the first
  // nonzero entry.
  Int trace0 = 0;
  for (int i = 0; i < d; ++i) trace0 += p.at(i, i)[0];
  bool flip = trace0 < 0;
  if (trace0 == 0) {
    for (int i = 0; i < d * d; ++i) {
      const IntPoly& e = p.at(i / d, i % d);
      if (!e.is_zero()) {
        flip = e.leading() < 0;
        break;
      }
    }
  }
  if (flip)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) p.at(i, j) = -p.at(i, j);

  // Spot check at a fresh place: the full integer product (both triangles)
  // must match sign * gcd(Q) * P there, which validates the mirrored upper
  // half against the true product.
  Int spot = 211 + 2 * Int(opt.spot_seed + unsigned(attempt));
  while (!is_probable_prime(spot)) spot = spot + 2;
  {
    IntMatrix inner_s = mul(core_inv.basis(spot), right(spot));
    IntMatrix ps = p(spot);
    Int qg = run.q_gcd(spot);
    Int sign = flip ? -1 : 1;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Int full = chat_diag[i](spot) * inner_s.at(i, j) * run.fb_dual.column_gcds[j](spot);
        if (sign * ps.at(i, j) * qg != full)
          throw PipelineFailure("spot check failed at the fresh place");
      }
  }

  // Exact verification: X(vT_s) P = P X(vT_s)^tr for every generator.
  for (int s = 0; s < g.generators(); ++s) {
    PolyMatrix lhs = mul(gens[s], p);
    PolyMatrix rhs = mul(p, duals[s]);
    if (!(lhs == rhs)) throw PipelineFailure("intertwining verification failed");
  }

  if (!matrix_palindromic_even(p, &run.m_P))
    throw PipelineFailure("result is not evenly palindromic");
  run.P = std::move(p);
  run.stats = gram_stats(run.P);
  return run;
}

}  // namespace

GramRun compute_gram(const WGraph& g, const CoxeterSystem& cox,
                     std::optional<std::uint32_t> jmask_opt, const PipelineOptions& opt) {
  if (cox.rank() != g.generators())
    throw std::domain_error("compute_gram: Coxeter rank differs from the generator count");
  const int d = g.dimension();

  std::uint32_t jmask;
  int seed_vertex;
  if (jmask_opt) {
    jmask = *jmask_opt;
    seed_vertex = -1;
    for (const auto& bc : benson_curtis_subsets(g))
      if (bc.mask == jmask) {
        seed_vertex = bc.vertex;
        break;
      }
    if (seed_vertex < 0)
      throw std::domain_error("compute_gram: J is not a Benson-Curtis subset of this graph");
  } else {
    auto subsets = benson_curtis_subsets(g);
    if (subsets.empty()) throw std::domain_error("compute_gram: no Benson-Curtis subset");
    jmask = subsets.front().mask;
    seed_vertex = subsets.front().vertex;
  }

  if (d == 1) {
    GramRun run;
    run.jmask = jmask;
    run.seed_vertex = 0;
    run.tree.entries.push_back({0, 0});
    run.lengths = {0};
    run.tree_place = 1;
    run.P = PolyMatrix(1, 1);
    run.P.at(0, 0) = IntPoly{1};
    run.B = run.Bdual = run.P;
    run.dual_seed = {IntPoly{1}};
    run.fb = run.fb_dual = factor_basis(run.P);
    run.bhat_scale = IntPoly{1};
    run.q_gcd = IntPoly{1};
    run.m_P = 0;
    run.stats = gram_stats(run.P);
    return run;
  }

  std::string last_error;
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    try {
      return run_once(g, jmask, seed_vertex, opt, attempt);
    } catch (const PipelineFailure& e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("compute_gram: all attempts failed: " + last_error);
}

GramStats gram_stats(const PolyMatrix& p) {
  GramStats s;
  s.max_degree = std::max(p.max_degree(), 0);
  s.max_abs_coeff = p.max_abs_coeff();
  IntMatrix at0 = eval_at_zero(p);
  s.diagonal_at_zero = true;
  for (int i = 0; i < p.rows() && s.diagonal_at_zero; ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (i != j && at0.at(i, j) != 0) {
        s.diagonal_at_zero = false;
        break;
      }
  s.det_prime_divisors = prime_divisors(int_det(at0));
  return s;
}

bool check_balanced(const PolyMatrix& p) { return int_det(eval_at_zero(p)) != 0; }

namespace {

// Cyclotomic sweep: divide out Phi_k while possible (phi(k) <= deg), then
// judge the remaining cofactor directly.
ObservationProbe probe_exponent(const IntPoly& expo) {
  ObservationProbe probe;
  if (expo.is_zero()) {
    probe.holds = false;
    probe.detail = "zero exponent";
    return probe;
  }
  IntPoly rest = primitive_part(expo);
  if (int_content(expo) != 1) {
    probe.holds = false;
    probe.detail = "exponent has nontrivial integer content";
  }
  // v-power factors are monic and palindromic; strip them before the sweep
  if (int val = rest.valuation(); val > 0) rest = divexact(rest, IntPoly::monomial(1, val));
  if (rest.degree() > 12) {
    probe.fully_factored = false;
    if (!is_palindromic(rest)) {
      probe.holds = false;
      probe.detail = "exponent is not palindromic";
    }
    return probe;
  }
  // Cyclotomics Phi_k via Phi_k(x) = (x^k - 1) / prod_{d | k, d < k} Phi_d.
  std::vector<IntPoly> cyclo(1);
  auto phi = [&](int k) -> const IntPoly& {
    while (int(cyclo.size()) <= k) {
      int n = int(cyclo.size());
      IntVec xn(size_t(n) + 1, Int(0));
      xn[0] = -1;
      xn[n] = 1;
      IntPoly f = IntPoly::from_coeffs(std::move(xn));
      for (int dd = 1; dd < n; ++dd)
        if (n % dd == 0) f = divexact(f, cyclo[dd]);
      cyclo.push_back(std::move(f));
    }
    return cyclo[k];
  };
  // phi(k) <= 12 happens only for k <= 42, so this bound covers every
  // cyclotomic that could divide a cofactor of degree <= 12.
  const int sweep_bound = 4 * rest.degree() + 30;
  for (int k = 1; rest.degree() > 0 && k <= sweep_bound; ++k) {
    const IntPoly& p = phi(k);
    if (p.degree() > rest.degree()) continue;
    while (rest.degree() >= p.degree() && divides(p, rest)) {
      rest = divexact(rest, p);
      if (k == 1 || !is_palindromic(p)) {
        probe.holds = false;
        probe.detail = "factor Phi_" + std::to_string(k) + " is not palindromic";
      }
    }
  }
  if (rest.degree() > 0) {
    probe.fully_factored = false;
    if (!is_palindromic(rest) || rest.leading() != 1) {
      probe.holds = false;
      probe.detail = "non-cyclotomic cofactor fails the palindromic/monic check";
    }
  }
  return probe;
}

}  // namespace

std::string DiagnosticsReport::summary() const {
  std::ostringstream os;
  auto line = [&](const char* name, const ObservationProbe& p) {
    os << name << ": " << (p.holds ? "holds" : "VIOLATED");
    if (!p.fully_factored) os << " (partial factorization)";
    if (!p.detail.empty()) os << " - " << p.detail;
    os << '\n';
  };
  line("obs1 (d_i <= l(w_i)+1)", obs1);
  line("obs2 (exp(B) factors monic palindromic)", obs2);
  line("obs3 (d'_i = d_i)", obs3);
  line("obs4 (exp(B') factors monic palindromic)", obs4);
  return os.str();
}

DiagnosticsReport diagnostics(const GramRun& run, const LiftOptions& opt) {
  DiagnosticsReport rep;
  for (size_t i = 0; i < run.fb.row_v_exponents.size(); ++i)
    if (run.fb.row_v_exponents[i] > run.lengths[i] + 1) {
      rep.obs1.holds = false;
      rep.obs1.detail = "d_" + std::to_string(i + 1) + " exceeds l+1";
    }
  rep.obs3.holds = !run.r_fallback;
  if (run.r_fallback) rep.obs3.detail = "fallback diagonal R^{-1}R' was inserted";
  rep.obs2 = probe_exponent(poly_exponent(run.B, opt));
  rep.obs4 = probe_exponent(poly_exponent(run.Bdual, opt));
  return rep;
}

}  // namespace wgram
