#include "cutsparse/strength.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutsparse/union_find.hpp"

namespace cutsparse {

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix adjacency_matrix(const WeightedGraph& g) {
  Matrix w(g.n, std::vector<double>(g.n, 0.0));
  for (const WeightedEdge& e : g.edges) {
    w[e.u][e.v] += e.w;  // parallel edges accumulate
    w[e.v][e.u] += e.w;
  }
  return w;
}

Matrix induced_matrix(const Matrix& full, const std::vector<uint32_t>& verts) {
  size_t k = verts.size();
  Matrix w(k, std::vector<double>(k, 0.0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) w[i][j] = w[j][i] = full[verts[i]][verts[j]];
  return w;
}

struct LocalCut {
  double value = 0.0;
  std::vector<char> in_side;  // local indices
};

/// Stoer-Wagner on a local adjacency matrix (consumed). Deterministic:
/// maximum-adjacency selection breaks ties on the smallest index and only
/// strictly better phase cuts replace the incumbent.
LocalCut stoer_wagner(Matrix w) {
  const size_t n = w.size();
  std::vector<char> active(n, 1);
  std::vector<std::vector<uint32_t>> merged(n);
  for (size_t i = 0; i < n; ++i) merged[i] = {static_cast<uint32_t>(i)};

  LocalCut best;
  best.value = std::numeric_limits<double>::infinity();
  size_t remaining = n;
  while (remaining > 1) {
    std::vector<double> tight(n, 0.0);
    std::vector<char> added(n, 0);
    size_t prev = SIZE_MAX, last = SIZE_MAX;
    for (size_t step = 0; step < remaining; ++step) {
      size_t sel = SIZE_MAX;
      for (size_t i = 0; i < n; ++i) {
        if (!active[i] || added[i]) continue;
        if (sel == SIZE_MAX || tight[i] > tight[sel]) sel = i;
      }
      added[sel] = 1;
      prev = last;
      last = sel;
      for (size_t i = 0; i < n; ++i)
        if (active[i] && !added[i]) tight[i] += w[sel][i];
    }
    double phase_cut = tight[last];
    if (phase_cut < best.value) {
      best.value = phase_cut;
      best.in_side.assign(n, 0);
      for (uint32_t v : merged[last]) best.in_side[v] = 1;
    }
    // contract last into prev
    for (size_t i = 0; i < n; ++i) {
      if (!active[i] || i == last || i == prev) continue;
      w[prev][i] += w[last][i];
      w[i][prev] = w[prev][i];
    }
    merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
    active[last] = 0;
    --remaining;
  }
  return best;
}

std::vector<uint32_t> connected_component_labels(const Matrix& full,
                                                 const std::vector<uint32_t>& verts) {
  // Labels are local indices into verts; UF over local positions.
  UnionFind uf(static_cast<uint32_t>(verts.size()));
  for (uint32_t i = 0; i < verts.size(); ++i)
    for (uint32_t j = i + 1; j < verts.size(); ++j)
      if (full[verts[i]][verts[j]] > 0.0) uf.unite(i, j);
  std::vector<uint32_t> label(verts.size());
  for (uint32_t i = 0; i < verts.size(); ++i) label[i] = uf.find(i);
  return label;
}

struct DecompPair {
  uint32_t u, v;      // global ids
  size_t result_idx;  // into the output vector
};

struct DecompState {
  const Matrix& full;
  std::vector<double>* strengths;                  // per result_idx
  std::vector<std::vector<uint32_t>>* components;  // optional, per result_idx
  // Per result_idx: strength and component of the current candidate,
  // updated whenever the running cut bound strictly increases.
  std::vector<double> cand_strength;
  std::vector<size_t> cand_component;              // index into nodes
  std::vector<std::vector<uint32_t>> nodes;
};

/// Recursive min-cut decomposition. inherited is the running max of min
/// cuts over ancestors containing the node; a pair's strength is the
/// running max at the moment its endpoints separate.
void decompose(DecompState& st, std::vector<uint32_t> verts, std::vector<DecompPair> pairs,
               double inherited) {
  if (verts.size() < 2 || pairs.empty()) return;

  std::vector<uint32_t> label = connected_component_labels(st.full, verts);
  std::vector<uint32_t> local_of(st.full.size(), UINT32_MAX);
  for (uint32_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = i;

  // Group vertices and pairs by component; pairs split across components
  // are finalized with their current candidate.
  std::vector<uint32_t> comp_roots;
  for (uint32_t i = 0; i < verts.size(); ++i)
    if (label[i] == i) comp_roots.push_back(i);

  for (uint32_t root : comp_roots) {
    std::vector<uint32_t> comp_verts;
    for (uint32_t i = 0; i < verts.size(); ++i)
      if (label[i] == root) comp_verts.push_back(verts[i]);

    std::vector<DecompPair> comp_pairs;
    for (const DecompPair& p : pairs) {
      uint32_t lu = local_of[p.u], lv = local_of[p.v];
      if (label[lu] == root && label[lv] == root) comp_pairs.push_back(p);
    }
    if (comp_pairs.empty()) continue;

    LocalCut cut = stoer_wagner(induced_matrix(st.full, comp_verts));
    double lambda = cut.value;
    double running = std::max(inherited, lambda);
    size_t node_id = SIZE_MAX;
    if (lambda > inherited) {
      // This node is the (running)-strong component for pairs inside it.
      st.nodes.push_back(comp_verts);
      node_id = st.nodes.size() - 1;
    }
    for (const DecompPair& p : comp_pairs) {
      if (node_id != SIZE_MAX) {
        st.cand_strength[p.result_idx] = running;
        st.cand_component[p.result_idx] = node_id;
      }
    }

    std::vector<uint32_t> side_a, side_b;
    for (size_t i = 0; i < comp_verts.size(); ++i)
      (cut.in_side[i] ? side_a : side_b).push_back(comp_verts[i]);

    std::vector<char> in_a(st.full.size(), 0);
    for (uint32_t v : side_a) in_a[v] = 1;

    std::vector<DecompPair> pairs_a, pairs_b;
    for (const DecompPair& p : comp_pairs) {
      bool ua = in_a[p.u], va = in_a[p.v];
      if (ua && va)
        pairs_a.push_back(p);
      else if (!ua && !va)
        pairs_b.push_back(p);
      else {
        // Separated by this min cut: strength is the running max here.
        (*st.strengths)[p.result_idx] = running;
        if (st.components) {
          size_t nid = st.cand_component[p.result_idx];
          (*st.components)[p.result_idx] = st.nodes[nid];
        }
      }
    }
    decompose(st, std::move(side_a), std::move(pairs_a), running);
    decompose(st, std::move(side_b), std::move(pairs_b), running);
  }

  // Pairs across components of this node: endpoints were last together in
  // an ancestor; their candidate is already final.
  std::vector<char> seen(st.full.size(), 0);
  for (const DecompPair& p : pairs) {
    uint32_t lu = local_of[p.u], lv = local_of[p.v];
    if (label[lu] != label[lv]) {
      (*st.strengths)[p.result_idx] = st.cand_strength[p.result_idx];
      if (st.components) {
        size_t nid = st.cand_component[p.result_idx];
        (*st.components)[p.result_idx] = nid == SIZE_MAX
                                             ? std::vector<uint32_t>{}
                                             : st.nodes[nid];
      }
    }
  }
  (void)seen;
}

void run_decomposition(const WeightedGraph& g,
                       const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                       std::vector<double>& strengths,
                       std::vector<std::vector<uint32_t>>* components, uint32_t max_n) {
  if (g.n > max_n)
    throw GraphError("exact strength oracle refuses n > " + std::to_string(max_n) +
                     " (verification oracle, not production)");
  for (const WeightedEdge& e : g.edges)
    if (!(e.w > 0.0)) throw GraphError("exact_strengths: weights must be positive");

  Matrix full = adjacency_matrix(g);
  strengths.assign(pairs.size(), 0.0);
  if (components) components->assign(pairs.size(), {});

  DecompState st{full, &strengths, components, {}, {}, {}};
  st.cand_strength.assign(pairs.size(), 0.0);
  st.cand_component.assign(pairs.size(), SIZE_MAX);

  std::vector<uint32_t> verts(g.n);
  for (uint32_t v = 0; v < g.n; ++v) verts[v] = v;
  std::vector<DecompPair> dp;
  dp.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u >= g.n || v >= g.n) throw GraphError("pair vertex out of range");
    if (u == v) throw GraphError("pair endpoints must differ");
    dp.push_back({u, v, i});
  }
  decompose(st, std::move(verts), std::move(dp), 0.0);
}

}  // namespace

CutResult mincut(const WeightedGraph& g) {
  if (g.n < 2) throw GraphError("mincut: need at least 2 vertices");
  Matrix full = adjacency_matrix(g);
  std::vector<uint32_t> verts(g.n);
  for (uint32_t v = 0; v < g.n; ++v) verts[v] = v;
  std::vector<uint32_t> label = connected_component_labels(full, verts);

  CutResult result;
  bool connected = std::all_of(label.begin(), label.end(),
                               [&](uint32_t l) { return l == label[0]; });
  if (!connected) {
    result.value = 0.0;
    for (uint32_t v = 0; v < g.n; ++v)
      if (label[v] == label[0]) result.side.side.push_back(v);
    return result;
  }

  LocalCut cut = stoer_wagner(std::move(full));
  result.value = cut.value;
  for (uint32_t v = 0; v < g.n; ++v)
    if (cut.in_side[v]) result.side.side.push_back(v);
  // Canonical side: the one containing the smallest vertex id.
  if (result.side.side.empty() || result.side.side.front() != 0) {
    std::vector<uint32_t> other;
    std::vector<char> in(g.n, 0);
    for (uint32_t v : result.side.side) in[v] = 1;
    for (uint32_t v = 0; v < g.n; ++v)
      if (!in[v]) other.push_back(v);
    if (!other.empty() && other.front() < (result.side.side.empty() ? g.n : result.side.side.front()))
      result.side.side = std::move(other);
  }
  return result;
}

StrengthMap exact_strengths(const WeightedGraph& g, uint32_t max_n) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(g.edges.size());
  for (const WeightedEdge& e : g.edges) pairs.push_back({e.u, e.v});
  StrengthMap map;
  run_decomposition(g, pairs, map.s, nullptr, max_n);
  return map;
}

std::vector<PairStrength> pair_strengths(const WeightedGraph& g,
                                         const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                                         uint32_t max_n) {
  std::vector<double> strengths;
  std::vector<std::vector<uint32_t>> comps;
  run_decomposition(g, pairs, strengths, &comps, max_n);
  std::vector<PairStrength> out(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    out[i].strength = strengths[i];
    out[i].component = std::move(comps[i]);
  }
  return out;
}

StrengthMap brute_strengths(const WeightedGraph& g) {
  if (g.n > 12) throw GraphError("brute_strengths: limited to n <= 12");
  const uint32_t n = g.n;
  StrengthMap map;
  map.s.assign(g.edges.size(), 0.0);

  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    // minimum induced cut over subsets of mask containing its lowest bit
    uint32_t low = mask & (~mask + 1);
    double lambda = std::numeric_limits<double>::infinity();
    uint32_t rest = mask ^ low;
    // enumerate submasks of rest; side = low | sub, proper when sub != rest
    uint32_t sub = 0;
    while (true) {
      uint32_t side = low | sub;
      if (side != mask) {
        double cut = 0.0;
        for (const WeightedEdge& e : g.edges) {
          bool iu = (mask >> e.u) & 1u, iv = (mask >> e.v) & 1u;
          if (!iu || !iv) continue;
          bool su = (side >> e.u) & 1u, sv = (side >> e.v) & 1u;
          if (su != sv) cut += e.w;
        }
        lambda = std::min(lambda, cut);
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    if (!(lambda > 0.0)) continue;  // induced subgraph disconnected
    for (size_t i = 0; i < g.edges.size(); ++i) {
      const WeightedEdge& e = g.edges[i];
      if (((mask >> e.u) & 1u) && ((mask >> e.v) & 1u)) map.s[i] = std::max(map.s[i], lambda);
    }
  }
  return map;
}

bool kweak_count_check(const WeightedGraph& g, const StrengthMap& strengths, double k) {
  if (strengths.s.size() != g.edges.size())
    throw GraphError("kweak_count_check: strength map does not cover the graph");
  size_t weak = 0;
  for (double s : strengths.s)
    if (s < k) ++weak;
  return static_cast<double>(weak) <= k * (static_cast<double>(g.n) - 1.0);
}

double added_edge_strength(const WeightedGraph& g, const std::vector<uint32_t>& component,
                           uint32_t u, uint32_t v, double base) {
  if (component.empty()) return 1.0;  // endpoints in different components: e is a bridge
  Matrix full = adjacency_matrix(g);
  full[u][v] += 1.0;  // the added unit edge
  full[v][u] += 1.0;

  // Any subgraph witnessing strength base+1 for the added edge lies inside
  // the base-strong component of (u, v), so the search never has to leave it.
  std::vector<uint32_t> verts = component;
  double best = base;
  while (verts.size() >= 2) {
    LocalCut cut = stoer_wagner(induced_matrix(full, verts));
    best = std::max(best, cut.value);
    if (best >= base + 1.0) return base + 1.0;
    std::vector<char> in_side(g.n, 0);
    std::vector<uint32_t> side_a, side_b;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (cut.in_side[i]) {
        in_side[verts[i]] = 1;
        side_a.push_back(verts[i]);
      } else {
        side_b.push_back(verts[i]);
      }
    }
    if (in_side[u] != in_side[v]) return base;  // pair separated below base+1
    verts = in_side[u] ? std::move(side_a) : std::move(side_b);
  }
  return base;
}

}  // namespace cutsparse
