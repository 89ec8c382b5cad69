#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutsparse/coin.hpp"
#include "cutsparse/graph.hpp"
#include "cutsparse/params.hpp"
#include "cutsparse/sparsifier.hpp"

namespace cutsparse {

/// An assignment of each vertex to a class id; class ids are dense in
/// [0, class_count).
class Partition {
 public:
  static Partition whole(uint32_t n);       // one class {V}
  static Partition singletons(uint32_t n);  // n classes

  explicit Partition(std::vector<uint32_t> class_of);

  uint32_t n() const { return static_cast<uint32_t>(class_of_.size()); }
  uint32_t class_of(uint32_t v) const { return class_of_[v]; }
  uint32_t class_count() const { return class_count_; }
  bool same_class(uint32_t u, uint32_t v) const { return class_of_[u] == class_of_[v]; }

  /// True iff every class of *this is a subset of a class of coarser.
  bool refines(const Partition& coarser) const;

 private:
  std::vector<uint32_t> class_of_;
  uint32_t class_count_ = 0;
};

/// Uniform value in [0,1) per edge index; refine draws one per edge.
using EdgeSampler = std::function<double(uint64_t edge_index)>;

/// One round of refinement: sample each edge with probability p, split
/// every class of s into the connected components induced by the sampled
/// edges. The result refines s by construction (unions are only applied
/// within a class).
Partition refine(const Partition& s, double p, const EdgeStream& edges,
                 const EdgeSampler& sampler);

/// X(S): indices of edges whose endpoints lie in distinct classes.
std::vector<uint32_t> crossing_edges(const Partition& s, const EdgeStream& edges);

struct RefinementSampleResult {
  Sparsifier sample;
  /// L(e) per stream edge: the least level l at which e crosses S_{l,K};
  /// L+1 when the endpoints stay connected at every level.
  std::vector<uint32_t> levels;
};

/// Reference in-memory sampler: builds the S_{l,k} grid with K refine
/// rounds per level, computes L(e), and keeps each edge independently
/// with probability z(e) = min{1, phi/(eps^2 2^L(e))} at weight 1/z(e).
/// sample_role selects the coin stream for the refine rounds; passing
/// CoinRole::Geom shares the per-(e,l,k) insertion coins with the one-pass
/// ladder, which is what the coupling check relies on.
RefinementSampleResult refinement_sample(const EdgeStream& stream, const RefineParams& params,
                                         const CoinSource& coins,
                                         CoinRole sample_role = CoinRole::Alg1,
                                         bool audit_refines = false);

}  // namespace cutsparse
