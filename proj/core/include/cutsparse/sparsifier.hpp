#pragma once

#include <cstdint>
#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

/// A kept edge with its provenance: the level at which the endpoints
/// separated and the probability it was sampled with. weight == w / prob.
struct SparsifierEdge {
  uint32_t u = 0;
  uint32_t v = 0;
  double weight = 1.0;
  uint64_t stream_index = 0;
  uint32_t level = 0;  // L'(e); L+1 encodes "never separated"
  double prob = 1.0;   // z'(e), in (0, 1]
};

struct Sparsifier {
  uint32_t n = 0;
  std::vector<SparsifierEdge> edges;

  size_t size() const { return edges.size(); }
  double total_weight() const {
    double t = 0.0;
    for (const auto& e : edges) t += e.weight;
    return t;
  }
  WeightedGraph graph() const {
    WeightedGraph g;
    g.n = n;
    g.edges.reserve(edges.size());
    for (const auto& e : edges) g.edges.push_back({e.u, e.v, e.weight});
    return g;
  }
};

}  // namespace cutsparse
