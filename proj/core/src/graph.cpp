#include "cutsparse/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace cutsparse {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  // Explicit mapping instead of uniform_real_distribution, which is
  // implementation-defined and would break cross-platform determinism.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
  throw GraphError("parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

int64_t EdgeStream::max_weight() const {
  int64_t w = 1;
  for (const Edge& e : edges) w = std::max(w, e.w);
  return w;
}

int64_t EdgeStream::total_weight() const {
  int64_t t = 0;
  for (const Edge& e : edges) t += e.w;
  return t;
}

double WeightedGraph::total_weight() const {
  double t = 0.0;
  for (const WeightedEdge& e : edges) t += e.w;
  return t;
}

WeightedGraph to_weighted(const EdgeStream& s) {
  WeightedGraph g;
  g.n = s.n;
  g.edges.reserve(s.edges.size());
  for (const Edge& e : s.edges) g.edges.push_back({e.u, e.v, static_cast<double>(e.w)});
  return g;
}

EdgeStream parse_edge_stream(std::istream& in) {
  EdgeStream s;
  bool have_n = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (!have_n) {
      long long n;
      if (!(ls >> n) || n < 1) parse_fail(line_no, "expected vertex count >= 1");
      std::string rest;
      if (ls >> rest) parse_fail(line_no, "trailing tokens after vertex count");
      s.n = static_cast<uint32_t>(n);
      have_n = true;
      continue;
    }
    long long u, v, w = 1;
    if (!(ls >> u >> v)) parse_fail(line_no, "expected 'u v' or 'u v w'");
    if (!(ls >> w)) w = 1;
    else {
      std::string rest;
      if (ls >> rest) parse_fail(line_no, "trailing tokens after edge");
    }
    if (u < 0 || v < 0 || u >= s.n || v >= s.n)
      parse_fail(line_no, "vertex id out of range [0, " + std::to_string(s.n) + ")");
    if (u == v) parse_fail(line_no, "self-loop");
    if (w <= 0) parse_fail(line_no, "non-positive weight");
    s.edges.push_back({static_cast<uint32_t>(u), static_cast<uint32_t>(v), w});
  }
  if (!have_n) throw GraphError("parse error: missing vertex count line");
  return s;
}

EdgeStream parse_edge_stream(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_stream(in);
}

EdgeStream load_edge_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_edge_stream(in);
}

void write_edge_stream(std::ostream& out, const EdgeStream& s) {
  out << s.n << "\n";
  for (const Edge& e : s.edges) {
    out << e.u << " " << e.v;
    if (e.w != 1) out << " " << e.w;
    out << "\n";
  }
}

std::string format_edge_stream(const EdgeStream& s) {
  std::ostringstream out;
  write_edge_stream(out, s);
  return out.str();
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.n << "\n";
  for (const WeightedEdge& e : g.edges)
    out << e.u << " " << e.v << " " << std::setprecision(12) << e.w << "\n";
}

WeightedGraph parse_weighted_graph(std::istream& in) {
  WeightedGraph g;
  bool have_n = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (!have_n) {
      long long n;
      if (!(ls >> n) || n < 1) parse_fail(line_no, "expected vertex count >= 1");
      g.n = static_cast<uint32_t>(n);
      have_n = true;
      continue;
    }
    long long u, v;
    double w = 1.0;
    if (!(ls >> u >> v)) parse_fail(line_no, "expected 'u v [w]'");
    if (!(ls >> w)) w = 1.0;
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) parse_fail(line_no, "vertex id out of range");
    if (u == v) parse_fail(line_no, "self-loop");
    if (!(w > 0)) parse_fail(line_no, "non-positive weight");
    g.edges.push_back({static_cast<uint32_t>(u), static_cast<uint32_t>(v), w});
  }
  if (!have_n) throw GraphError("parse error: missing vertex count line");
  return g;
}

WeightedGraph load_weighted_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_weighted_graph(in);
}

double cut_value(const WeightedGraph& g, const CutSpec& cut) {
  std::vector<char> in_side(g.n, 0);
  size_t side_size = 0;
  for (uint32_t v : cut.side) {
    if (v >= g.n) throw GraphError("cut side vertex out of range");
    if (!in_side[v]) {
      in_side[v] = 1;
      ++side_size;
    }
  }
  if (side_size == 0 || side_size == g.n)
    throw GraphError("cut side must be a proper nonempty subset");
  double value = 0.0;
  for (const WeightedEdge& e : g.edges)
    if (in_side[e.u] != in_side[e.v]) value += e.w;
  return value;
}

EdgeStream generate_gnp(uint32_t n, double p, uint64_t seed) {
  if (n < 1) throw GraphError("gnp: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw GraphError("gnp: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  EdgeStream s;
  s.n = n;
  for (uint32_t u = 0; u + 1 < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (unit_uniform(rng) < p) s.edges.push_back({u, v, 1});
  return s;
}

EdgeStream generate_star(uint32_t n) {
  if (n < 2) throw GraphError("star: n must be >= 2");
  EdgeStream s;
  s.n = n;
  for (uint32_t v = 1; v < n; ++v) s.edges.push_back({0, v, 1});
  return s;
}

EdgeStream generate_clique_chain(uint32_t cliques, uint32_t size) {
  if (cliques < 1 || size < 2) throw GraphError("clique_chain: need c >= 1, s >= 2");
  EdgeStream s;
  s.n = cliques * size;
  for (uint32_t c = 0; c < cliques; ++c) {
    uint32_t base = c * size;
    for (uint32_t i = 0; i < size; ++i)
      for (uint32_t j = i + 1; j < size; ++j) s.edges.push_back({base + i, base + j, 1});
    if (c + 1 < cliques) s.edges.push_back({base + size - 1, base + size, 1});
  }
  return s;
}

EdgeStream generate_grid(uint32_t rows, uint32_t cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw GraphError("grid: need rows*cols >= 2");
  EdgeStream s;
  s.n = rows * cols;
  auto id = [cols](uint32_t r, uint32_t c) { return r * cols + c; };
  for (uint32_t r = 0; r < rows; ++r)
    for (uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) s.edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) s.edges.push_back({id(r, c), id(r + 1, c), 1});
    }
  return s;
}

EdgeStream generate_random_multigraph(uint32_t n, uint64_t m, uint64_t seed) {
  if (n < 2) throw GraphError("random_multigraph: n must be >= 2");
  std::mt19937_64 rng(seed);
  EdgeStream s;
  s.n = n;
  s.edges.reserve(m);
  for (uint64_t i = 0; i < m; ++i) {
    uint32_t u = static_cast<uint32_t>(rng() % n);
    uint32_t v = static_cast<uint32_t>(rng() % (n - 1));
    if (v >= u) ++v;
    s.edges.push_back({u, v, 1});
  }
  return s;
}

StreamOrder parse_stream_order(const std::string& name) {
  if (name == "as_given") return StreamOrder::AsGiven;
  if (name == "random") return StreamOrder::Random;
  if (name == "sorted_by_endpoint") return StreamOrder::SortedByEndpoint;
  if (name == "reversed") return StreamOrder::Reversed;
  throw GraphError("unknown stream order: " + name);
}

EdgeStream shuffle_stream(EdgeStream s, StreamOrder order, uint64_t seed) {
  switch (order) {
    case StreamOrder::AsGiven:
      break;
    case StreamOrder::Reversed:
      std::reverse(s.edges.begin(), s.edges.end());
      break;
    case StreamOrder::SortedByEndpoint:
      std::stable_sort(s.edges.begin(), s.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
      });
      break;
    case StreamOrder::Random: {
      std::mt19937_64 rng(seed);
      for (size_t i = s.edges.size(); i > 1; --i)
        std::swap(s.edges[i - 1], s.edges[rng() % i]);
      break;
    }
  }
  return s;
}

}  // namespace cutsparse
