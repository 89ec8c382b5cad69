#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutsparse {

/// Raised by parsers and by operations whose preconditions fail.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An undirected edge with a positive integer weight (default 1).
/// Self-loops are rejected at parse time; parallel edges are allowed.
struct Edge {
  uint32_t u = 0;
  uint32_t v = 0;
  int64_t w = 1;

  bool operator==(const Edge&) const = default;
};

/// An ordered edge sequence over a fixed vertex set 0..n-1. The order is
/// the (adversarial) stream order; replaying the stream yields the same
/// sequence.
struct EdgeStream {
  uint32_t n = 0;
  std::vector<Edge> edges;

  size_t m() const { return edges.size(); }
  int64_t max_weight() const;
  int64_t total_weight() const;

  bool operator==(const EdgeStream&) const = default;
};

/// A graph with real-valued positive edge weights; used both for inputs
/// and for sparsifier outputs.
struct WeightedEdge {
  uint32_t u = 0;
  uint32_t v = 0;
  double w = 1.0;
};

struct WeightedGraph {
  uint32_t n = 0;
  std::vector<WeightedEdge> edges;

  size_t m() const { return edges.size(); }
  double total_weight() const;
};

/// One side S of a cut (S, V \ S). Must be a proper nonempty subset.
struct CutSpec {
  std::vector<uint32_t> side;
};

WeightedGraph to_weighted(const EdgeStream& s);

// --- edge-list text format ---------------------------------------------
// Lines starting with '#' are comments. The first data line is n; each
// further data line is "u v" or "u v w" with decimal integers.

EdgeStream parse_edge_stream(std::istream& in);
EdgeStream parse_edge_stream(const std::string& text);
EdgeStream load_edge_stream(const std::string& path);

void write_edge_stream(std::ostream& out, const EdgeStream& s);
std::string format_edge_stream(const EdgeStream& s);

// Sparsifier output format: first line n, then "u v weight" with the
// weight printed with 12 significant digits.
void write_weighted_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph parse_weighted_graph(std::istream& in);
WeightedGraph load_weighted_graph(const std::string& path);

/// Total weight of edges with exactly one endpoint in cut.side.
/// Throws if the side is empty or the full vertex set.
double cut_value(const WeightedGraph& g, const CutSpec& cut);

// --- generators --------------------------------------------------------

EdgeStream generate_gnp(uint32_t n, double p, uint64_t seed);
EdgeStream generate_star(uint32_t n);
/// cliques cliques of size s joined in a path by single bridge edges
/// (last vertex of clique i to first vertex of clique i+1).
EdgeStream generate_clique_chain(uint32_t cliques, uint32_t s);
EdgeStream generate_grid(uint32_t rows, uint32_t cols);
/// A random multigraph with exactly m edges; endpoints uniform, u != v.
EdgeStream generate_random_multigraph(uint32_t n, uint64_t m, uint64_t seed);

enum class StreamOrder { AsGiven, Random, SortedByEndpoint, Reversed };

StreamOrder parse_stream_order(const std::string& name);
EdgeStream shuffle_stream(EdgeStream s, StreamOrder order, uint64_t seed);

}  // namespace cutsparse
