// Standard-basis machinery: breadth-first spinning of a seed vector under
// matrix generators with an exact membership oracle, the (parent, generator)
// Schreier tree that replays the search without searching, and homomorphism
// computation C = B^{-1} B' between equivalent irreducible actions.

#pragma once

#include <iosfwd>

#include "wgram/polyring_linear.hpp"

namespace wgram {

// entries[k] = (parent index, generator index), 0-based internally; the
// root entry is (0, 0) and parents always precede children.
struct SchreierTree {
  std::vector<std::pair<int, int>> entries;

  int size() const { return int(entries.size()); }
  // Tree depth of each vertex; for the specialized Hecke search these are
  // the word lengths l(w_i).
  std::vector<int> depths() const;

  bool operator==(const SchreierTree& o) const = default;
};

// Serialization: one line per entry "parent generator", 1-based, first
// line "0 0".
void write_tree(std::ostream& os, const SchreierTree& tree);
SchreierTree read_tree(std::istream& is);

struct StandardBasisQ {
  IntMatrix basis;  // rows are the basis vectors, in discovery order
  SchreierTree tree;
};

// BFS standard basis over Q for integer generator matrices: run from a
// nonzero seed, membership decided exactly by the p-adic oracle. Generators
// are tried in input order; the loop order (basis vector outer, generator
// inner) is part of the contract since the tree must be reproducible.
// Throws std::domain_error if the closure does not span (reducible action).
StandardBasisQ standard_basis(const std::vector<IntMatrix>& generators, const IntVec& seed,
                              std::uint32_t first_prime = 251);

// Replays a Schreier tree: u_k = u_{parent(k)} * X(A_{gen(k)}).
IntMatrix replay_schreier(const SchreierTree& tree, const IntVec& seed,
                          const std::vector<IntMatrix>& generators);
PolyMatrix replay_schreier(const SchreierTree& tree, const std::vector<IntPoly>& seed,
                           const std::vector<SparsePolyMatrix>& generators);

// Intertwiner C with X(A) * C = C * X'(A) for all generators, primitive,
// unique up to sign; kernels are the rank-1 kernels of the distinguished
// actions of the two representations. Verified exactly before returning.
PolyMatrix hom_between(const std::vector<SparsePolyMatrix>& gens,
                       const std::vector<SparsePolyMatrix>& dual_gens,
                       const PolyMatrix& distinguished,       // acts on the primal side
                       const PolyMatrix& dual_distinguished,  // acts on the dual side
                       const SchreierTree& tree, const LiftOptions& opt = {});

}  // namespace wgram
