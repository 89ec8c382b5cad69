#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cutsparse/union_find.hpp"

namespace cutsparse {

/// The grid of connectivity structures D_{l,k}, l in [1..L], k in [1..K],
/// linearized as J = K(l-1)+k in [1..LK]. Cell 0 is the virtual
/// all-connected structure D_0. Cells are allocated lazily on first
/// insertion; an untouched cell is the identity partition.
///
/// Chain refinement invariant: connected-in-D_J implies connected-in-D_J'
/// for J' < J, guaranteed by only inserting an edge into D_J when its
/// endpoints are connected in D_{J-1}.
class RefinementLadder {
 public:
  RefinementLadder(uint32_t n, uint32_t L, uint32_t K);

  uint32_t n() const { return n_; }
  uint32_t levels() const { return L_; }
  uint32_t rounds() const { return K_; }
  uint32_t cell_count() const { return L_ * K_; }

  uint32_t cell_index(uint32_t l, uint32_t k) const { return K_ * (l - 1) + k; }
  uint32_t level_of(uint32_t j) const { return (j - 1) / K_ + 1; }
  uint32_t round_of(uint32_t j) const { return (j - 1) % K_ + 1; }

  /// j == 0 queries the virtual D_0 (always true).
  bool connected(uint32_t j, uint32_t u, uint32_t v);

  /// Merges the endpoints' components in cell j (1-based).
  /// Returns true iff the components differed.
  bool insert(uint32_t j, uint32_t u, uint32_t v);

  /// J*: smallest J in [1..LK+1] such that u, v are NOT connected in D_J;
  /// LK+1 when connected everywhere. Binary search over the chain.
  uint32_t threshold(uint32_t u, uint32_t v);

  /// L': smallest l in [1..L+1] such that u, v are not connected in
  /// D_{l,K}; L+1 when connected at every level.
  uint32_t level_threshold(uint32_t u, uint32_t v);

  /// Component id per vertex for cell (l, k); identity if untouched.
  std::vector<uint32_t> component_ids(uint32_t l, uint32_t k);

  /// True iff connected(j, u, v) over j = 1..LK has the shape
  /// true...true,false...false.
  bool chain_monotone(uint32_t u, uint32_t v);

  uint64_t uf_ops() const;
  uint64_t insertions(uint32_t j) const { return insertions_[j - 1]; }
  uint64_t total_insertions() const;

 private:
  UnionFind& cell(uint32_t j);

  uint32_t n_, L_, K_;
  std::vector<std::unique_ptr<UnionFind>> cells_;
  std::vector<uint64_t> insertions_;
};

}  // namespace cutsparse
