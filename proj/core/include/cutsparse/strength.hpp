#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

struct CutResult {
  double value = 0.0;
  CutSpec side;
};

/// Global minimum cut (Stoer-Wagner, deterministic tie-breaking: the
/// returned side is the one containing the smallest vertex id). Value 0
/// with one connected component as the side iff the graph is disconnected.
/// Throws for n < 2.
CutResult mincut(const WeightedGraph& g);

struct StrengthMap {
  std::vector<double> s;  // per edge index of the input graph
};

/// Exact strong connectivity per edge via recursive min-cut
/// decomposition. This is the testing oracle; it refuses graphs larger
/// than max_n rather than run forever.
StrengthMap exact_strengths(const WeightedGraph& g, uint32_t max_n = 500);

/// Strong connectivity of arbitrary vertex pairs: the largest k such that
/// a k-strong component contains both. 0 when u, v lie in different
/// connected components; u != v required.
struct PairStrength {
  double strength = 0.0;
  /// Vertex set of the k-strong component containing both endpoints,
  /// k = strength (empty when strength is 0).
  std::vector<uint32_t> component;
};
std::vector<PairStrength> pair_strengths(const WeightedGraph& g,
                                         const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                                         uint32_t max_n = 500);

/// Ground-truth strengths by 2^n subset enumeration; n <= 12.
StrengthMap brute_strengths(const WeightedGraph& g);

/// Weak-edge count bound: |{e : s_e < k}| <= k(n-1). Must always hold.
bool kweak_count_check(const WeightedGraph& g, const StrengthMap& strengths, double k);

/// Strength that the unit edge (u, v) would have in g + {(u,v)}, resolved
/// inside the supplied component (the deepest decomposition node of g
/// containing both endpoints, as returned by pair_strengths). base is the
/// pair strength in g; the answer is base or base + 1. Unit-weight graphs.
double added_edge_strength(const WeightedGraph& g, const std::vector<uint32_t>& component,
                           uint32_t u, uint32_t v, double base);

}  // namespace cutsparse
