#include "wgram/hecke_wgraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wgram {

CoxeterSystem::CoxeterSystem(int rank) : rank_(rank), m_(size_t(rank) * rank, 2) {
  if (rank < 1) throw std::domain_error("CoxeterSystem: rank must be positive");
  for (int s = 0; s < rank; ++s) m_[size_t(s) * rank + s] = 1;
}

CoxeterSystem CoxeterSystem::from_orders(int rank,
                                         const std::map<std::pair<int, int>, int>& orders) {
  CoxeterSystem cox(rank);
  for (const auto& [st, m] : orders) cox.set_order(st.first, st.second, m);
  return cox;
}

int CoxeterSystem::order(int s, int t) const {
  if (s < 0 || t < 0 || s >= rank_ || t >= rank_)
    throw std::domain_error("CoxeterSystem: generator out of range");
  return m_[size_t(s) * rank_ + t];
}

void CoxeterSystem::set_order(int s, int t, int m) {
  if (s == t || m < 2) throw std::domain_error("CoxeterSystem: bad order");
  if (s < 0 || t < 0 || s >= rank_ || t >= rank_)
    throw std::domain_error("CoxeterSystem: generator out of range");
  m_[size_t(s) * rank_ + t] = m;
  m_[size_t(t) * rank_ + s] = m;
}

CoxeterSystem CoxeterSystem::series(const std::string& name, int rank) {
  CoxeterSystem cox(rank);
  if (name == "A") {
    for (int s = 0; s + 1 < rank; ++s) cox.set_order(s, s + 1, 3);
  } else if (name == "B") {
    if (rank < 2) throw std::domain_error("CoxeterSystem: B needs rank >= 2");
    for (int s = 0; s + 1 < rank; ++s) cox.set_order(s, s + 1, 3);
    cox.set_order(0, 1, 4);
  } else if (name == "E6") {
    if (rank != 6) throw std::domain_error("CoxeterSystem: E6 has rank 6");
    // Bourbaki: chain 1-3-4-5-6 with 2 attached to 4.
    cox.set_order(0, 2, 3);
    cox.set_order(2, 3, 3);
    cox.set_order(3, 4, 3);
    cox.set_order(4, 5, 3);
    cox.set_order(1, 3, 3);
  } else {
    throw std::domain_error("CoxeterSystem: unknown series " + name);
  }
  return cox;
}

void write_coxeter(std::ostream& os, const CoxeterSystem& cox) {
  os << "coxeter " << cox.rank() << '\n';
  for (int s = 0; s + 1 < cox.rank(); ++s) {
    for (int t = s + 1; t < cox.rank(); ++t) {
      if (t > s + 1) os << ' ';
      os << cox.order(s, t);
    }
    os << '\n';
  }
}

CoxeterSystem read_coxeter(std::istream& is) {
  std::string tag;
  int rank;
  if (!(is >> tag >> rank) || tag != "coxeter")
    throw std::domain_error("read_coxeter: bad header");
  CoxeterSystem cox(rank);
  for (int s = 0; s + 1 < rank; ++s)
    for (int t = s + 1; t < rank; ++t) {
      int m;
      if (!(is >> m)) throw std::domain_error("read_coxeter: missing order");
      cox.set_order(s, t, m);
    }
  return cox;
}

WGraph::WGraph(int dimension, int generators)
    : d_(dimension), s_(generators), isets_(dimension, 0) {
  if (dimension < 1 || generators < 1 || generators > 31)
    throw std::domain_error("WGraph: bad dimensions");
}

void WGraph::set_iset(int vertex, std::uint32_t mask) {
  if (vertex < 0 || vertex >= d_) throw std::domain_error("WGraph: vertex out of range");
  if (mask >> s_) throw std::domain_error("WGraph: I-set uses unknown generators");
  isets_[vertex] = mask;
}

void WGraph::set_edge(int i, int j, LaurentPoly m) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_ || i == j)
    throw std::domain_error("WGraph: bad edge");
  if (m.is_zero())
    edges_.erase({i, j});
  else
    edges_[{i, j}] = std::move(m);
}

void WGraph::set_edge_for(int i, int j, int s, LaurentPoly m) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_ || i == j || s < 0 || s >= s_)
    throw std::domain_error("WGraph: bad edge override");
  overrides_[{i, j, s}] = std::move(m);
}

LaurentPoly WGraph::edge(int i, int j, int s) const {
  if (auto it = overrides_.find({i, j, s}); it != overrides_.end()) return it->second;
  if (auto it = edges_.find({i, j}); it != edges_.end()) return it->second;
  return {};
}

bool WGraph::has_edge(int i, int j) const {
  if (edges_.count({i, j})) return true;
  for (int s = 0; s < s_; ++s)
    if (overrides_.count({i, j, s})) return true;
  return false;
}

void write_wgraph(std::ostream& os, const WGraph& g) {
  os << "wgraph " << g.dimension() << ' ' << g.generators() << '\n';
  for (int i = 0; i < g.dimension(); ++i) {
    os << "I " << i + 1 << " :";
    for (int s = 0; s < g.generators(); ++s)
      if (g.in_iset(i, s)) os << ' ' << s + 1;
    os << '\n';
  }
  for (const auto& [ij, m] : g.default_edges())
    os << "E " << ij.first + 1 << ' ' << ij.second + 1 << " : " << m.str() << '\n';
  for (const auto& [ijs, m] : g.edge_overrides())
    os << "E " << std::get<0>(ijs) + 1 << ' ' << std::get<1>(ijs) + 1 << " : " << m.str() << ' '
       << std::get<2>(ijs) + 1 << '\n';
}

WGraph read_wgraph(std::istream& is) {
  std::string line, tag;
  int d = 0, s = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ls >> tag;
    if (tag != "wgraph") throw std::domain_error("read_wgraph: bad header");
    if (!(ls >> d >> s)) throw std::domain_error("read_wgraph: bad header");
    break;
  }
  WGraph g(d, s);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "I") {
      int vertex;
      std::string colon;
      if (!(ls >> vertex >> colon) || colon != ":")
        throw std::domain_error("read_wgraph: bad I line");
      std::uint32_t mask = 0;
      int gen;
      while (ls >> gen) {
        if (gen < 1 || gen > s) throw std::domain_error("read_wgraph: generator out of range");
        mask |= 1u << (gen - 1);
      }
      g.set_iset(vertex - 1, mask);
    } else if (tag == "E") {
      int i, j;
      std::string colon, poly, over;
      if (!(ls >> i >> j >> colon >> poly) || colon != ":")
        throw std::domain_error("read_wgraph: bad E line");
      if (ls >> over)
        g.set_edge_for(i - 1, j - 1, std::stoi(over) - 1, LaurentPoly::parse(poly));
      else
        g.set_edge(i - 1, j - 1, LaurentPoly::parse(poly));
    } else {
      throw std::domain_error("read_wgraph: unknown record " + tag);
    }
  }
  return g;
}

SparsePolyMatrix rep_matrix(const WGraph& g, int s) {
  const int d = g.dimension();
  SparsePolyMatrix x(d, d);
  for (int j = 0; j < d; ++j) {
    if (g.in_iset(j, s)) {
      x.add(j, j, IntPoly{-1});
      continue;
    }
    x.add(j, j, IntPoly::monomial(1, 2));
    for (int i = 0; i < d; ++i) {
      if (i == j || !g.in_iset(i, s)) continue;
      LaurentPoly m = g.edge(i, j, s);
      if (m.is_zero()) continue;
      LaurentPoly vm = LaurentPoly::monomial(1, 1) * m;
      if (vm.valuation() < 0)
        throw std::domain_error("rep_matrix: edge coefficient violates v*m in v*Z[v]");
      x.add(j, i, vm.coeffs().shifted(vm.valuation()));
    }
  }
  return x;
}

SparsePolyMatrix dual_rep_matrix(const WGraph& g, int s) { return rep_matrix(g, s).transposed(); }

std::vector<SparsePolyMatrix> rep_generators(const WGraph& g) {
  std::vector<SparsePolyMatrix> out;
  out.reserve(g.generators());
  for (int s = 0; s < g.generators(); ++s) out.push_back(rep_matrix(g, s));
  return out;
}

std::vector<SparsePolyMatrix> dual_generators(const WGraph& g) {
  std::vector<SparsePolyMatrix> out;
  out.reserve(g.generators());
  for (int s = 0; s < g.generators(); ++s) out.push_back(dual_rep_matrix(g, s));
  return out;
}

namespace {

PolyMatrix alternating_product(const PolyMatrix& a, const PolyMatrix& b, int m) {
  PolyMatrix acc;
  for (int t = 0; t < m; ++t) {
    const PolyMatrix& gen = (t % 2 == 0) ? a : b;
    acc = (t == 0) ? gen : mul(acc, gen);
  }
  return acc;
}

}  // namespace

ValidationReport validate_wgraph(const WGraph& g, const CoxeterSystem& cox) {
  ValidationReport rep;
  if (cox.rank() != g.generators()) {
    rep.violations.push_back("generator count differs from the Coxeter rank");
    return rep;
  }
  // (a) coefficient conditions: v^{L(s)} m in v*Z[v] and star-invariance.
  for (int i = 0; i < g.dimension(); ++i)
    for (int j = 0; j < g.dimension(); ++j) {
      if (i == j) continue;
      for (int s = 0; s < g.generators(); ++s) {
        LaurentPoly m = g.edge(i, j, s);
        if (m.is_zero()) continue;
        if (!g.in_iset(i, s) || g.in_iset(j, s)) continue;  // unused in the action
        if (m.valuation() < 0)
          rep.violations.push_back("edge (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "): v*m is not in v*Z[v]");
        if (!(star(m) == m))
          rep.violations.push_back("edge (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") coefficient not star-invariant");
      }
    }
  // (b) quadratic relation (vT_s - v^2)(vT_s + 1) = 0.
  std::vector<PolyMatrix> xs;
  for (int s = 0; s < g.generators(); ++s) xs.push_back(rep_matrix(g, s).to_dense());
  PolyMatrix id = PolyMatrix::identity(g.dimension());
  for (int s = 0; s < g.generators(); ++s) {
    PolyMatrix lhs = xs[s], rhs = xs[s];
    for (int i = 0; i < g.dimension(); ++i) {
      lhs.at(i, i) = lhs.at(i, i) - IntPoly::monomial(1, 2);
      rhs.at(i, i) = rhs.at(i, i) + IntPoly{1};
    }
    if (!mul(lhs, rhs).is_zero())
      rep.violations.push_back("quadratic relation fails for generator " + std::to_string(s + 1));
  }
  // (c) braid relations.
  for (int s = 0; s < g.generators(); ++s)
    for (int t = s + 1; t < g.generators(); ++t) {
      int m = cox.order(s, t);
      if (!(alternating_product(xs[s], xs[t], m) == alternating_product(xs[t], xs[s], m)))
        rep.violations.push_back("braid relation fails for pair (" + std::to_string(s + 1) +
                                 "," + std::to_string(t + 1) + ") at order " + std::to_string(m));
    }
  return rep;
}

std::vector<BensonCurtisSubset> benson_curtis_subsets(const WGraph& g) {
  std::vector<BensonCurtisSubset> out;
  for (std::uint32_t mask = 0; mask < (1u << g.generators()); ++mask) {
    int holder = -1, count = 0;
    for (int i = 0; i < g.dimension() && count < 2; ++i)
      if ((g.iset(i) & mask) == mask) {
        holder = i;
        ++count;
      }
    if (count == 1) out.push_back({mask, holder});
  }
  return out;
}

PolyMatrix distinguished_action(const WGraph& g, std::uint32_t jmask) {
  const int d = g.dimension();
  PolyMatrix acc(d, d);
  int count = 0;
  for (int s = 0; s < g.generators(); ++s) {
    if (!(jmask >> s & 1)) continue;
    ++count;
    PolyMatrix xs = dual_rep_matrix(g, s).to_dense();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc.at(i, j) = acc.at(i, j) + xs.at(i, j);
  }
  for (int i = 0; i < d; ++i) acc.at(i, i) = acc.at(i, i) + IntPoly(Int(count));
  return acc;
}

SchreierTree specialized_schreier_tree(const WGraph& g, std::uint32_t jmask, const Int& b,
                                       std::uint32_t first_prime) {
  int seed_vertex = -1;
  for (const auto& bc : benson_curtis_subsets(g))
    if (bc.mask == jmask) {
      seed_vertex = bc.vertex;
      break;
    }
  if (seed_vertex < 0)
    throw std::domain_error("specialized_schreier_tree: J is not a Benson-Curtis subset");
  std::vector<IntMatrix> gens;
  gens.reserve(g.generators());
  for (int s = 0; s < g.generators(); ++s) gens.push_back(rep_matrix(g, s)(b));
  IntVec seed(g.dimension(), 0);
  seed[seed_vertex] = 1;
  return standard_basis(gens, seed, first_prime).tree;
}

namespace {

// Integral reflection representation from the Coxeter matrix: generator s
// maps alpha_t to alpha_t - a_{st} alpha_s, with a_{ss} = 2 and off-diagonal
// Cartan pairs (a_{st}, a_{ts}) = (0,0), (-1,-1), (-1,-2), (-1,-3) for
// orders 2, 3, 4, 6.
std::vector<std::vector<long>> reflection_generator(const CoxeterSystem& cox, int s) {
  const int n = cox.rank();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int t = 0; t < n; ++t) m[t][t] = 1;
  for (int t = 0; t < n; ++t) {
    long a;
    if (t == s) {
      a = 2;
    } else {
      switch (cox.order(s, t)) {
        case 2: a = 0; break;
        case 3: a = -1; break;
        case 4: a = (s < t) ? -1 : -2; break;
        case 6: a = (s < t) ? -1 : -3; break;
        default:
          throw std::domain_error("enumerate_group: order outside {2,3,4,6}");
      }
    }
    m[t][s] -= a;
  }
  return m;
}

std::vector<std::vector<long>> mat_mul_long(const std::vector<std::vector<long>>& a,
                                            const std::vector<std::vector<long>>& b) {
  const int n = int(a.size());
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

std::string mat_key(const std::vector<std::vector<long>>& m) {
  std::ostringstream os;
  for (const auto& r : m)
    for (long x : r) os << x << ',';
  return os.str();
}

}  // namespace

std::vector<std::vector<int>> enumerate_group(const CoxeterSystem& cox, int size_cap) {
  const int n = cox.rank();
  std::vector<std::vector<std::vector<long>>> gens;
  gens.reserve(n);
  for (int s = 0; s < n; ++s) gens.push_back(reflection_generator(cox, s));

  std::vector<std::vector<long>> id(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;

  std::vector<std::vector<int>> words{{}};
  std::vector<std::vector<std::vector<long>>> elems{id};
  std::unordered_map<std::string, int> seen{{mat_key(id), 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      auto next = mat_mul_long(elems[head], gens[s]);
      std::string key = mat_key(next);
      if (seen.count(key)) continue;
      if (int(elems.size()) >= size_cap)
        throw std::domain_error("enumerate_group: size cap exceeded");
      seen.emplace(std::move(key), int(elems.size()));
      std::vector<int> w = words[head];
      w.push_back(s);
      words.push_back(std::move(w));
      elems.push_back(std::move(next));
    }
  }
  return words;
}

PolyMatrix bruteforce_P0(const WGraph& g, const CoxeterSystem& cox, int size_cap) {
  auto words = enumerate_group(cox, size_cap);
  int lw0 = 0;
  for (const auto& w : words) lw0 = std::max(lw0, int(w.size()));

  std::vector<PolyMatrix> xs;
  for (int s = 0; s < g.generators(); ++s) xs.push_back(rep_matrix(g, s).to_dense());
  const int d = g.dimension();
  PolyMatrix acc(d, d);
  for (const auto& w : words) {
    PolyMatrix xw = PolyMatrix::identity(d);
    for (int s : w) xw = mul(xw, xs[s]);
    // Right actions on row vectors transpose the classical sum, so the
    // intertwiner is sum_w X(T_w) X(T_w)^tr.
    PolyMatrix term = mul(xw, xw.transposed());
    IntPoly scale = IntPoly::monomial(1, 2 * (lw0 - int(w.size())));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc.at(i, j) = acc.at(i, j) + scale * term.at(i, j);
  }
  return acc;
}

}  // namespace wgram
