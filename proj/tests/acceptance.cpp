// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria. Criterion 4 is gated on the externally supplied 10_s
// W-graph data file and reports SKIP when the file is absent.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "wgram/gram_pipeline.hpp"

using namespace wgram;
namespace fs = std::filesystem;

namespace {

fs::path g_data;

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<void()> body;  // throws on failure
};

PolyMatrix load_dense(const std::string& name) {
  std::ifstream in(g_data / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_matrix(in).as_dense();
}

WGraph load_graph(const std::string& name) {
  std::ifstream in(g_data / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_wgraph(in);
}

CoxeterSystem load_cox(const std::string& name) {
  std::ifstream in(g_data / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_coxeter(in);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::vector<EvalSample> load_detect_samples() {
  std::ifstream in(g_data / "degree_detect_example.txt");
  require(bool(in), "missing degree_detect_example.txt");
  std::vector<EvalSample> samples;
  std::string b, v;
  while (in >> b >> v) samples.push_back({Int(b), Rat(Int(v))});
  require(samples.size() == 13, "expected 13 samples");
  return samples;
}

std::set<long> places_of(const std::vector<EvalSample>& s, const std::vector<int>& idx) {
  std::set<long> out;
  for (int i : idx) out.insert(s[i].place.get_si());
  return out;
}

// ---- criterion bodies ----

void criterion_inverse_golden() {
  PolyMatrix btilde = load_dense("e6_10s_Btilde.mat");
  PolyMatrix bhat = load_dense("e6_10s_Bhat.mat");
  PolyInverse inv = poly_inverse(btilde);
  require(inv.scale == IntPoly{1}, "bhat scale is not 1");
  require(inv.basis == bhat, "inverse does not match the printed matrix");
}

void criterion_product_golden() {
  PolyMatrix bhat = load_dense("e6_10s_Bhat.mat");
  PolyMatrix btp = load_dense("e6_10s_Btilde_prime.mat");
  PolyMatrix want = load_dense("e6_10s_P.mat");

  MatmulOptions opt;
  opt.entry_check = [](int, int, const IntPoly& e) {
    return e.is_zero() || palindromic_class(e).kind == PalindromeKind::Palindromic;
  };
  PolyMatrix q = poly_matmul_lifted(bhat, btp, opt);
  PolyMatrix p(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) p.at(i, j) = -q.at(i, j);

  require(p == want, "P = -Q does not match the printed Gram matrix");
  require(p == p.transposed(), "P is not symmetric");
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      auto c = palindromic_class(p.at(i, j));
      require(c.kind == PalindromeKind::Palindromic && c.exponent == 6,
              "entry is not 6-palindromic");
    }
  require(p.max_degree() == 6, "max degree is not 6");
  require(p.max_abs_coeff() == 3, "max coefficient is not 3");
  IntMatrix at0(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) at0.at(i, j) = p.at(i, j)[0];
  require(at0 == IntMatrix::identity(p.rows()), "P at v=0 is not the identity");
  require(gram_stats(p).csv("10_s") == "10_s,6,3,y,", "stats row mismatch");
}

void criterion_degree_detection() {
  auto samples = load_detect_samples();
  auto comps = slope_components(samples);

  bool gamma7 = false;
  for (const auto& c : comps)
    if (c.slope == 7 && c.complete &&
        places_of(samples, c.members) == std::set<long>{47, 61, 79})
      gamma7 = true;
  require(gamma7, "Gamma_7 component {47,61,79} not found");

  std::vector<std::set<long>> comp13;
  for (const auto& c : comps)
    if (c.slope == 13) {
      require(c.complete, "Gamma_13 component is not complete");
      comp13.push_back(places_of(samples, c.members));
    }
  require(comp13.size() == 3, "Gamma_13 does not have exactly 3 components");
  auto has = [&](std::set<long> s) {
    return std::count(comp13.begin(), comp13.end(), s) == 1;
  };
  require(has({37, 43, 47, 53, 67, 73}), "B1 missing");
  require(has({31, 41, 61, 71}), "B2 missing");
  require(has({29, 59, 79}), "B3 missing");

  const IntPoly expect{1, 4, 8, 11, 12, 12, 12, 12, 12, 12, 11, 8, 4, 1};
  auto det = detect_degree(samples, RecoveryPolicy{});
  require(det.has_value(), "detection failed");
  require(det->degree == 13, "degree is not 13");
  require(det->scaled.is_integral() && det->scaled.to_int() == expect,
          "recovered coefficients differ");

  int first_k = 0;
  std::set<long> first_comp;
  for (int k = 3; k <= 13 && !first_k; ++k) {
    std::vector<EvalSample> prefix(samples.begin(), samples.begin() + k);
    for (const auto& c : slope_components(prefix))
      if (c.complete && c.members.size() >= 3) {
        first_k = k;
        first_comp = places_of(prefix, c.members);
        break;
      }
  }
  require(first_k == 6, "incremental run did not stop at k = 6");
  require(first_comp == std::set<long>{37, 43, 47}, "incremental component differs");
}

void criterion_schreier_golden() {
  WGraph g = load_graph("e6_10s.wgraph");
  std::ifstream tin(g_data / "e6_10s.tree");
  require(bool(tin), "missing e6_10s.tree");
  SchreierTree want = read_tree(tin);

  SchreierTree tree = specialized_schreier_tree(g, 0b110111u, 1);
  require(tree == want, "tree differs from the printed one");
  require(tree.depths() == std::vector<int>{0, 1, 2, 2, 2, 3, 3, 3, 4, 5},
          "lengths differ from [0,1,2,2,2,3,3,3,4,5]");

  auto subsets = benson_curtis_subsets(g);
  require(subsets.size() == 22, "expected 22 Benson-Curtis subsets");
  bool found = false;
  for (const auto& bc : subsets) found = found || bc.mask == 0b110111u;
  require(found, "J = {s1,s2,s3,s5,s6} not among the subsets");
}

void criterion_oracle_equivalence() {
  std::mt19937_64 rng(1234);
  auto rand_long = [&](long lo, long hi) {
    return long(std::uniform_int_distribution<long>(lo, hi)(rng));
  };

  // (a) rational recovery vs exhaustive lattice enumeration
  for (int t = 0; t < 10000; ++t) {
    Int b = rand_long(2, 10000);
    Int a = symmetric_mod(Int(rand_long(-1000000, 1000000)), b);
    if (a == 0) {
      auto r = recover_rational(Residue(a, b));
      require(r && r->numerator == 0 && r->denominator == 1, "zero residue");
      continue;
    }
    auto want = oracle::shortest_vector_enum(a, b);
    auto got = recover_rational(Residue(a, b));
    if (!want || gcd(want->x, want->y) != 1) {
      require(!got.has_value(), "recovery should have failed");
    } else {
      require(got.has_value(), "recovery failed unexpectedly");
      require(got->denominator == want->x && got->numerator == want->y,
              "recovered fraction differs from the enumerated shortest vector");
    }
  }

  // (b) integer linear algebra vs elimination and Smith oracles
  int matrices = 0;
  while (matrices < 200) {  // rank-deficient kernels up to 20 rows
    int n = 2 + int(rng() % 19);
    int cols = n - 1 + int(rng() % 3);
    std::vector<IntVec> rows;
    for (int i = 0; i + 1 < n; ++i) {
      IntVec r(cols);
      for (auto& x : r) x = rand_long(-9, 9);
      rows.push_back(std::move(r));
    }
    IntVec mix(cols, 0);
    for (int i = 0; i + 1 < n; ++i) {
      Int c = rand_long(-4, 4);
      for (int j = 0; j < cols; ++j) mix[j] += c * rows[i][j];
    }
    rows.insert(rows.begin() + int(rng() % n), std::move(mix));
    IntMatrix a = IntMatrix::from_rows(rows);
    auto kernel = oracle::rational_kernel(a);
    if (kernel.size() != 1) continue;
    ++matrices;
    IntVec got = int_nullspace_rank1(a);
    int anchor = -1;
    for (int i = 0; i < int(kernel[0].size()); ++i)
      if (kernel[0][i] != 0) {
        anchor = i;
        break;
      }
    Rat scale = Rat(got[anchor]) / kernel[0][anchor];
    for (int i = 0; i < int(kernel[0].size()); ++i)
      require(Rat(got[i]) == scale * kernel[0][i], "kernel direction differs");
    // fraction-free route: Bareiss elimination over constants
    PolyMatrix ap(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) ap.at(i, j) = IntPoly(a.at(i, j));
    auto ff = oracle::poly_kernel(ap);
    require(ff.size() == 1, "Bareiss kernel dimension differs");
    bool plus = true, minus = true;
    for (int i = 0; i < int(got.size()); ++i) {
      plus = plus && ff[0][i] == IntPoly(got[i]);
      minus = minus && ff[0][i] == IntPoly(-got[i]);
    }
    require(plus || minus, "Bareiss kernel direction differs");
  }
  while (matrices < 400) {  // inverses vs Smith form
    int n = 1 + int(rng() % 12);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = rand_long(-9, 9);
    if (int_det(a) == 0) continue;
    ++matrices;
    IntInverse inv = int_inverse(a);
    IntMatrix prod = mul(inv.basis, a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(prod.at(i, j) == (i == j ? inv.scale : Int(0)), "B*A != c*I");
    auto diag = oracle::smith_diagonal(a);
    require(int(diag.size()) == n && inv.scale == diag.back(),
            "scale differs from the largest elementary divisor");
  }
  while (matrices < 500) {  // membership decisions vs rational elimination
    int m = 1 + int(rng() % 6), cols = m + int(rng() % 4);
    IntMatrix a(m, cols);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = rand_long(-9, 9);
    if (oracle::rational_kernel(a).size() != 0) continue;  // need independent rows
    ++matrices;
    IntVec v(cols);
    bool inside = rng() % 2;
    if (inside) {
      Int den = rand_long(1, 9);
      IntVec coeff(m);
      for (auto& c : coeff) c = rand_long(-9, 9);
      bool ok = true;
      for (int j = 0; j < cols; ++j) {
        Int acc = 0;
        for (int i = 0; i < m; ++i) acc += coeff[i] * a.at(i, j);
        if (acc % den != 0) ok = false;
        v[j] = acc / den;
      }
      if (!ok) {
        --matrices;
        continue;
      }
    } else {
      for (auto& x : v) x = rand_long(-40, 40);
    }
    auto r = padic_decompose(a, v, 251);
    if (r.status == DecomposeStatus::BadPrime) {
      --matrices;
      continue;
    }
    // oracle decision: v in the Q-span iff appending v does not raise rank
    std::vector<IntVec> stacked;
    for (int i = 0; i < m; ++i) stacked.push_back(a.row(i));
    stacked.push_back(v);
    bool in_span = oracle::rational_kernel(IntMatrix::from_rows(stacked)).size() == 1;
    require(in_span == (r.status == DecomposeStatus::InSpan), "membership decision differs");
    if (r.status == DecomposeStatus::InSpan) {
      for (int j = 0; j < cols; ++j) {
        Int acc = 0;
        for (int i = 0; i < m; ++i) acc += r.decomp.numerators[i] * a.at(i, j);
        require(acc == r.decomp.denominator * v[j], "decomposition residual");
      }
    }
  }

  // (c) lifted products vs direct multiplication
  for (int t = 0; t < 200; ++t) {
    int l = 1 + int(rng() % 8), m = 1 + int(rng() % 8), n = 1 + int(rng() % 8);
    auto rand_poly = [&](int max_deg, long bound) {
      int d = int(rng() % (max_deg + 1));
      IntVec c(size_t(d) + 1);
      for (auto& x : c) x = rand_long(-bound, bound);
      return IntPoly::from_coeffs(std::move(c));
    };
    PolyMatrix a(l, m), b(m, n);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < m; ++j) a.at(i, j) = rand_poly(6, 100);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = rand_poly(6, 100);
    require(poly_matmul_lifted(a, b) == mul(a, b), "lifted product differs");
  }
}

void criterion_end_to_end_fixtures() {
  for (const char* name : {"a1", "a2", "a3", "b2", "e6_refl"}) {
    WGraph g = load_graph(std::string(name) + ".wgraph");
    CoxeterSystem cox =
        load_cox(std::string(name).substr(0, 2) == "e6" ? "e6.cox"
                                                        : std::string(name) + ".cox");
    GramRun run = compute_gram(g, cox);
    for (int s = 0; s < g.generators(); ++s) {
      PolyMatrix x = rep_matrix(g, s).to_dense();
      require(mul(x, run.P) == mul(run.P, x.transposed()),
              std::string(name) + ": intertwining fails");
    }
    require(run.P == run.P.transposed(), std::string(name) + ": not symmetric");
    require(matrix_gcd(run.P) == IntPoly{1}, std::string(name) + ": not primitive");
    require(run.m_P % 2 == 0 && run.m_P == run.P.max_degree(),
            std::string(name) + ": palindromic exponent");
    for (int i = 0; i < run.P.rows(); ++i)
      for (int j = 0; j < run.P.cols(); ++j)
        for (int k = 0; k <= run.m_P; ++k)
          require(run.P.at(i, j)[k] == run.P.at(i, j)[run.m_P - k],
                  std::string(name) + ": entry not palindromic");
    if (std::string(name) != "e6_refl") {  // |W| <= 24: brute-force proportionality
      PolyMatrix p0 = bruteforce_P0(g, cox);
      IntPoly g0 = matrix_gcd(p0);
      PolyMatrix prim = p0;
      for (int i = 0; i < prim.rows(); ++i)
        for (int j = 0; j < prim.cols(); ++j)
          if (!prim.at(i, j).is_zero()) prim.at(i, j) = divexact(prim.at(i, j), g0);
      bool plus = true, minus = true;
      for (int i = 0; i < prim.rows(); ++i)
        for (int j = 0; j < prim.cols(); ++j) {
          plus = plus && prim.at(i, j) == run.P.at(i, j);
          minus = minus && prim.at(i, j) == -run.P.at(i, j);
        }
      require(plus || minus, std::string(name) + ": not proportional to the brute force sum");
    }
  }
}

void criterion_e6_reflection_stats() {
  WGraph g = load_graph("e6_refl.wgraph");
  CoxeterSystem cox = load_cox("e6.cox");
  GramRun run = compute_gram(g, cox);
  require(run.stats.max_degree == 2, "degree != 2");
  require(run.stats.max_abs_coeff == 1, "coefficient != 1");
  require(run.stats.diagonal_at_zero, "not diagonal at v=0");
  require(run.stats.det_prime_divisors.empty(), "unexpected primes");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef WGRAM_DATA_DIR
  g_data = WGRAM_DATA_DIR;
#else
  g_data = "data";
#endif
  if (argc > 1) g_data = argv[1];

  std::vector<Criterion> criteria{
      {1, "inverse golden test (printed Btilde -> bhat = 1, printed Bhat)", 2.0,
       criterion_inverse_golden},
      {2, "product/pipeline golden test (Bhat * Btilde' -> printed P, stats 6,3,y,-)", 5.0,
       criterion_product_golden},
      {3, "degree detection (Gamma components, d = 13, prefix k = 6)", 1.0,
       criterion_degree_detection},
      {4, "Schreier golden test (10_s tree, lengths, 22 subsets)", 30.0,
       criterion_schreier_golden},
      {5, "oracle equivalence suite (recovery, integer linear algebra, products)", 120.0,
       criterion_oracle_equivalence},
      {6, "end-to-end property suite on bundled fixtures", 60.0,
       criterion_end_to_end_fixtures},
      {7, "E6 reflection representation stats (2, 1, diagonal, none)", 30.0,
       criterion_e6_reflection_stats},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (c.id == 4 && !std::ifstream(g_data / "e6_10s.wgraph")) {
      std::cout << "SKIP criterion 4: " << c.label << " (external data file not supplied)\n";
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    if (error.empty() && secs <= c.budget_seconds) {
      line << "PASS criterion " << c.id;
    } else {
      ++failures;
      line << "FAIL criterion " << c.id;
    }
    line << ": " << c.label << " [" << secs << "s";
    if (error.empty() && secs > c.budget_seconds) line << " > budget " << c.budget_seconds << "s";
    line << "]";
    if (!error.empty()) line << " - " << error;
    std::cout << line.str() << '\n';
  }
  if (failures == 0) std::cout << "all criteria passed\n";
  return failures;
}
