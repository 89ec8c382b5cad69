#include "cutsparse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cutsparse/strength.hpp"
#include "cutsparse/union_find.hpp"

namespace cutsparse {

VerifyMode VerifyMode::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "mincut") return mincut();
  if (text.rfind("random:", 0) == 0) {
    uint64_t cuts = std::stoull(text.substr(7));
    if (cuts == 0) throw GraphError("verify mode random:N needs N >= 1");
    return random(cuts);
  }
  throw GraphError("unknown verify mode: " + text + " (expected all|random:N|mincut)");
}

std::string VerifyMode::str() const {
  switch (kind) {
    case Kind::All:
      return "all";
    case Kind::Random:
      return "random:" + std::to_string(random_cuts);
    case Kind::MinCut:
      return "mincut";
  }
  return "?";
}

namespace {

double rel_error(double reference, double candidate) {
  if (reference == 0.0)
    return candidate == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(candidate - reference) / reference;
}

/// Cut values of both graphs for the side given as a bitmask over a
/// vertex set of at most 20 vertices.
std::pair<double, double> mask_cut(const WeightedGraph& g, const WeightedGraph& h,
                                   uint32_t mask) {
  double wg = 0.0, wh = 0.0;
  for (const WeightedEdge& e : g.edges)
    if (((mask >> e.u) ^ (mask >> e.v)) & 1u) wg += e.w;
  for (const WeightedEdge& e : h.edges)
    if (((mask >> e.u) ^ (mask >> e.v)) & 1u) wh += e.w;
  return {wg, wh};
}

}  // namespace

QualityReport verify_sparsifier(const WeightedGraph& g, const WeightedGraph& h, double eps,
                                const VerifyMode& mode, uint64_t seed) {
  if (g.n != h.n) throw GraphError("verify_sparsifier: vertex count mismatch");
  if (!(eps > 0.0)) throw GraphError("verify_sparsifier: eps must be > 0");

  QualityReport report;
  report.mode = mode.str();
  report.sample_edges = h.edges.size();
  report.total_weight = h.total_weight();

  switch (mode.kind) {
    case VerifyMode::Kind::All: {
      if (g.n > 20) throw GraphError("verify_sparsifier: mode all is limited to n <= 20");
      if (g.n < 2) throw GraphError("verify_sparsifier: need n >= 2");
      // Every cut exactly once: side = {0} plus a subset of 1..n-1,
      // excluding the full vertex set.
      uint32_t subsets = 1u << (g.n - 1);
      for (uint32_t bits = 0; bits + 1 < subsets; ++bits) {
        uint32_t mask = (bits << 1) | 1u;
        auto [wg, wh] = mask_cut(g, h, mask);
        report.max_rel_error = std::max(report.max_rel_error, rel_error(wg, wh));
        ++report.cuts_checked;
      }
      report.pass = report.max_rel_error <= eps;
      break;
    }
    case VerifyMode::Kind::Random: {
      if (g.n < 2) throw GraphError("verify_sparsifier: need n >= 2");
      std::mt19937_64 rng(seed);
      std::vector<char> side(g.n);
      for (uint64_t i = 0; i < mode.random_cuts; ++i) {
        size_t count;
        do {
          count = 0;
          for (uint32_t v = 0; v < g.n; ++v) {
            side[v] = static_cast<char>(rng() & 1u);
            count += static_cast<size_t>(side[v]);
          }
        } while (count == 0 || count == g.n);
        double wg = 0.0, wh = 0.0;
        for (const WeightedEdge& e : g.edges)
          if (side[e.u] != side[e.v]) wg += e.w;
        for (const WeightedEdge& e : h.edges)
          if (side[e.u] != side[e.v]) wh += e.w;
        report.max_rel_error = std::max(report.max_rel_error, rel_error(wg, wh));
        ++report.cuts_checked;
      }
      report.pass = report.max_rel_error <= eps;
      break;
    }
    case VerifyMode::Kind::MinCut: {
      double lg = mincut(g).value;
      double lh = mincut(h).value;
      report.mincut_rel_error = rel_error(lg, lh);
      report.max_rel_error = report.mincut_rel_error;
      report.cuts_checked = 1;
      report.pass = report.mincut_rel_error <= eps;
      break;
    }
  }
  return report;
}

CertificateReport verify_certificate(const WeightedGraph& g,
                                     const std::vector<uint32_t>& cert_edge_indices, uint32_t l) {
  if (g.n > 16) throw GraphError("verify_certificate: limited to n <= 16");
  if (g.n < 2) throw GraphError("verify_certificate: need n >= 2");
  std::vector<char> in_cert(g.edges.size(), 0);
  for (uint32_t idx : cert_edge_indices) {
    if (idx >= g.edges.size()) throw GraphError("verify_certificate: edge index out of range");
    in_cert[idx] = 1;
  }
  const double threshold = std::ldexp(1.0, static_cast<int>(l));

  CertificateReport report;
  report.ok = true;
  report.certificate_edges = cert_edge_indices.size();
  uint32_t subsets = 1u << (g.n - 1);
  for (uint32_t bits = 0; bits + 1 < subsets; ++bits) {
    uint32_t mask = (bits << 1) | 1u;
    ++report.cuts_checked;
    double value = 0.0;
    for (const WeightedEdge& e : g.edges)
      if (((mask >> e.u) ^ (mask >> e.v)) & 1u) value += e.w;
    if (value > threshold) continue;
    for (uint32_t t = 0; t < g.edges.size(); ++t) {
      const WeightedEdge& e = g.edges[t];
      if ((((mask >> e.u) ^ (mask >> e.v)) & 1u) && !in_cert[t]) {
        report.ok = false;
        CertificateViolation v;
        v.edge_index = t;
        for (uint32_t x = 0; x < g.n; ++x)
          if ((mask >> x) & 1u) v.cut_side.push_back(x);
        report.violations.push_back(std::move(v));
      }
    }
  }
  return report;
}

ComponentShrinkResult component_shrink_check(const WeightedGraph& g, double kappa, double lambda,
                                             uint32_t trials, uint64_t seed) {
  if (trials == 0) throw GraphError("component_shrink_check: trials must be >= 1");
  if (!(kappa > 0.0)) throw GraphError("component_shrink_check: kappa must be > 0");
  ComponentShrinkResult result;
  result.p = std::min(1.0, lambda / kappa);
  result.gamma = 7.0 / 8.0 + std::exp(-lambda / 2.0) / 8.0;

  std::mt19937_64 rng(seed);
  uint32_t passed = 0;
  for (uint32_t trial = 0; trial < trials; ++trial) {
    UnionFind uf(g.n);
    for (const WeightedEdge& e : g.edges) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < result.p) uf.unite(e.u, e.v);
    }
    if (static_cast<double>(uf.components()) <= result.gamma * static_cast<double>(g.n)) ++passed;
  }
  result.pass_rate = static_cast<double>(passed) / static_cast<double>(trials);
  return result;
}

SizeScalingReport size_scaling_report(
    const std::function<size_t(const EdgeStream&, uint64_t)>& run,
    const std::vector<EdgeStream>& family, uint32_t seeds) {
  if (seeds == 0) throw GraphError("size_scaling_report: seeds must be >= 1");
  SizeScalingReport report;
  for (const EdgeStream& stream : family) {
    double total = 0.0;
    for (uint32_t seed = 0; seed < seeds; ++seed)
      total += static_cast<double>(run(stream, seed));
    report.rows.push_back({stream.n, total / static_cast<double>(seeds)});
  }
  for (size_t i = 0; i + 1 < report.rows.size(); ++i)
    report.ratios.push_back(report.rows[i + 1].mean_edges / report.rows[i].mean_edges);
  return report;
}

}  // namespace cutsparse
