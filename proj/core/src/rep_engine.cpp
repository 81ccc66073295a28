#include "wgram/rep_engine.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace wgram {

std::vector<int> SchreierTree::depths() const {
  std::vector<int> d(entries.size(), 0);
  for (size_t k = 1; k < entries.size(); ++k) {
    int parent = entries[k].first;
    if (parent < 0 || parent >= int(k)) throw std::domain_error("SchreierTree: bad parent");
    d[k] = d[parent] + 1;
  }
  return d;
}

void write_tree(std::ostream& os, const SchreierTree& tree) {
  os << "0 0\n";
  for (size_t k = 1; k < tree.entries.size(); ++k)
    os << tree.entries[k].first + 1 << ' ' << tree.entries[k].second + 1 << '\n';
}

SchreierTree read_tree(std::istream& is) {
  SchreierTree t;
  int a, b;
  if (!(is >> a >> b) || a != 0 || b != 0)
    throw std::domain_error("read_tree: first line must be 0 0");
  t.entries.push_back({0, 0});
  while (is >> a >> b) t.entries.push_back({a - 1, b - 1});
  return t;
}

namespace {

StandardBasisQ standard_basis_attempt(const std::vector<IntMatrix>& gens, const IntVec& seed,
                                      std::uint32_t p, bool& bad_prime) {
  bad_prime = false;
  const int n = int(seed.size());
  PadicRowSpace space(p, n);
  if (space.consider(seed).verdict != PadicRowSpace::Verdict::Independent) {
    // A nonzero seed is independent over Q; anything else is the prime's fault.
    bad_prime = true;
    return {};
  }
  std::vector<IntVec> rows{seed};
  SchreierTree tree;
  tree.entries.push_back({0, 0});

  for (int i = 0; i < int(rows.size()) && int(rows.size()) < n; ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      IntVec w = mul(rows[i], gens[j]);
      auto r = space.consider(w);
      if (r.verdict == PadicRowSpace::Verdict::BadPrime) {
        bad_prime = true;
        return {};
      }
      if (r.verdict == PadicRowSpace::Verdict::Independent) {
        rows.push_back(std::move(w));
        tree.entries.push_back({i, int(j)});
        if (int(rows.size()) == n) break;  // early exit: the basis is complete
      }
    }
  }
  if (int(rows.size()) < n)
    throw std::domain_error("standard_basis: generators do not span (reducible action)");
  return {IntMatrix::from_rows(rows), std::move(tree)};
}

}  // namespace

StandardBasisQ standard_basis(const std::vector<IntMatrix>& generators, const IntVec& seed,
                              std::uint32_t first_prime) {
  if (is_zero(seed)) throw std::domain_error("standard_basis: zero seed");
  PrimeSchedule primes(first_prime);
  for (int t = 0; t < 5; ++t) {
    bool bad = false;
    StandardBasisQ b = standard_basis_attempt(generators, seed, primes.next(), bad);
    if (!bad) return b;
  }
  throw std::runtime_error("standard_basis: persistent bad primes");
}

IntMatrix replay_schreier(const SchreierTree& tree, const IntVec& seed,
                          const std::vector<IntMatrix>& generators) {
  for (const auto& g : generators)
    if (g.rows() != int(seed.size()) || g.cols() != int(seed.size()))
      throw std::domain_error("replay_schreier: dimension mismatch");
  std::vector<IntVec> rows{seed};
  for (size_t k = 1; k < tree.entries.size(); ++k) {
    auto [parent, gen] = tree.entries[k];
    rows.push_back(mul(rows.at(parent), generators.at(gen)));
  }
  return IntMatrix::from_rows(rows);
}

PolyMatrix replay_schreier(const SchreierTree& tree, const std::vector<IntPoly>& seed,
                           const std::vector<SparsePolyMatrix>& generators) {
  for (const auto& g : generators)
    if (g.rows() != int(seed.size()) || g.cols() != int(seed.size()))
      throw std::domain_error("replay_schreier: dimension mismatch");
  PolyMatrix b(tree.size(), int(seed.size()));
  b.set_row(0, seed);
  for (size_t k = 1; k < tree.entries.size(); ++k) {
    auto [parent, gen] = tree.entries[k];
    b.set_row(int(k), mul(b.row(parent), generators.at(gen)));
  }
  return b;
}

PolyMatrix hom_between(const std::vector<SparsePolyMatrix>& gens,
                       const std::vector<SparsePolyMatrix>& dual_gens,
                       const PolyMatrix& distinguished, const PolyMatrix& dual_distinguished,
                       const SchreierTree& tree, const LiftOptions& opt) {
  std::vector<IntPoly> seed = poly_nullspace_rank1(distinguished, opt);
  std::vector<IntPoly> dual_seed = poly_nullspace_rank1(dual_distinguished, opt);
  PolyMatrix b = replay_schreier(tree, seed, gens);
  PolyMatrix bp = replay_schreier(tree, dual_seed, dual_gens);

  PolyInverse inv = poly_inverse(b, opt);
  MatmulOptions mopt;
  mopt.lift = opt;
  PolyMatrix c = poly_matmul_lifted(inv.basis, bp, mopt);

  IntPoly g = matrix_gcd(c);
  if (g.is_zero()) throw std::domain_error("hom_between: zero homomorphism");
  if (!(g.degree() == 0 && g.leading() == 1))
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j)
        if (!c.at(i, j).is_zero()) c.at(i, j) = divexact(c.at(i, j), g);
  for (int i = 0; i < c.rows() * c.cols(); ++i) {
    const IntPoly& e = c.at(i / c.cols(), i % c.cols());
    if (e.is_zero()) continue;
    if (e.leading() < 0)
      for (int k = 0; k < c.rows(); ++k)
        for (int l = 0; l < c.cols(); ++l) c.at(k, l) = -c.at(k, l);
    break;
  }

  for (size_t s = 0; s < gens.size(); ++s) {
    PolyMatrix lhs = mul(gens[s], c);
    PolyMatrix rhs = mul(c, dual_gens[s]);
    if (!(lhs == rhs)) throw std::runtime_error("hom_between: intertwining check failed");
  }
  return c;
}

}  // namespace wgram
