// W-graph data model for equal-parameter Iwahori-Hecke algebras: vertex
// I-sets and edge coefficients give sparse representing matrices for the
// rescaled generators vT_s (diagonal -1 or v^2; entry (j,i) = v*m_ij when
// s lies in I_i but not I_j). Validation checks the coefficient conditions
// plus the quadratic and braid relations. Also here: Benson-Curtis seed
// search, the distinguished element with co-rank-one action, specialized
// Schreier trees, reduced-word enumeration, and the small-group brute-force
// Gram oracle.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "wgram/rep_engine.hpp"

namespace wgram {

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  explicit CoxeterSystem(int rank);  // all orders 2 (free commuting product)

  static CoxeterSystem from_orders(int rank, const std::map<std::pair<int, int>, int>& orders);

  int rank() const { return rank_; }
  int order(int s, int t) const;            // m(s, t), 0-based
  void set_order(int s, int t, int m);      // m >= 2, symmetric

  // Named series used by the bundled fixtures: "A" (path, m=3),
  // "B" (path with one m=4 bond), "E6".
  static CoxeterSystem series(const std::string& name, int rank);

 private:
  int rank_ = 0;
  std::vector<int> m_;
};

void write_coxeter(std::ostream& os, const CoxeterSystem& cox);
CoxeterSystem read_coxeter(std::istream& is);

class WGraph {
 public:
  WGraph() = default;
  WGraph(int dimension, int generators);

  int dimension() const { return d_; }
  int generators() const { return s_; }

  std::uint32_t iset(int vertex) const { return isets_[vertex]; }
  bool in_iset(int vertex, int s) const { return isets_[vertex] >> s & 1; }
  void set_iset(int vertex, std::uint32_t mask);

  // Directed coefficient m_ij (flows from vertex j toward vertex i when
  // s in I_i \ I_j); per-s overrides win over the default.
  void set_edge(int i, int j, LaurentPoly m);
  void set_edge_for(int i, int j, int s, LaurentPoly m);
  LaurentPoly edge(int i, int j, int s) const;
  bool has_edge(int i, int j) const;

  const std::map<std::pair<int, int>, LaurentPoly>& default_edges() const { return edges_; }
  const std::map<std::tuple<int, int, int>, LaurentPoly>& edge_overrides() const {
    return overrides_;
  }

  bool operator==(const WGraph& o) const = default;

 private:
  int d_ = 0, s_ = 0;
  std::vector<std::uint32_t> isets_;
  std::map<std::pair<int, int>, LaurentPoly> edges_;
  std::map<std::tuple<int, int, int>, LaurentPoly> overrides_;
};

void write_wgraph(std::ostream& os, const WGraph& g);
WGraph read_wgraph(std::istream& is);

// Representing matrix of vT_s (right action on row vectors), sparse.
SparsePolyMatrix rep_matrix(const WGraph& g, int s);
// The dual action T_w -> X(T_{w^-1})^tr on generators: the transpose.
SparsePolyMatrix dual_rep_matrix(const WGraph& g, int s);

std::vector<SparsePolyMatrix> rep_generators(const WGraph& g);
std::vector<SparsePolyMatrix> dual_generators(const WGraph& g);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ValidationReport validate_wgraph(const WGraph& g, const CoxeterSystem& cox);

struct BensonCurtisSubset {
  std::uint32_t mask;  // J as a generator bitmask
  int vertex;          // the unique vertex with J contained in its I-set
};
// All J (as bitmasks) contained in exactly one vertex I-set, ascending mask.
std::vector<BensonCurtisSubset> benson_curtis_subsets(const WGraph& g);

// v * X'(T^J) = sum_{s in J} X'(vT_s) + |J| * I, entries in Z[v]; its row
// kernel is one-dimensional for a Benson-Curtis subset.
PolyMatrix distinguished_action(const WGraph& g, std::uint32_t jmask);

// Standard-basis Schreier tree of the specialization v -> b from the seed
// e_i belonging to jmask. Throws std::domain_error when the specialized
// action fails to span (bad place: try the next b).
SchreierTree specialized_schreier_tree(const WGraph& g, std::uint32_t jmask, const Int& b,
                                       std::uint32_t first_prime = 251);

// Reduced words (BFS by length) for all elements of the Coxeter group,
// canonicalized through the integral reflection representation. Orders
// must lie in {2,3,4,6}; throws when |W| exceeds the cap.
std::vector<std::vector<int>> enumerate_group(const CoxeterSystem& cox, int size_cap = 2000);

// Small-group oracle: v^{2l(w0)} * sum_w X(T_w)^tr X(T_w), an intertwiner
// between the representation and its dual with entries in Z[v] of degree
// at most 2l(w0).
PolyMatrix bruteforce_P0(const WGraph& g, const CoxeterSystem& cox, int size_cap = 2000);

}  // namespace wgram
