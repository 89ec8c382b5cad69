#include "cutsparse/bk.hpp"

#include <cmath>

namespace cutsparse {

double bk_rho(uint32_t n, double d) {
  if (n < 1) throw GraphError("bk_rho: n must be >= 1");
  return 16.0 * (d + 2.0) * std::log(static_cast<double>(n));
}

SampleProbabilities bk_probabilities(const WeightedGraph& g, const StrengthMap& strengths,
                                     double eps, double d, double rho_scale) {
  if (!(eps > 0.0)) throw GraphError("bk_probabilities: eps must be > 0");
  if (strengths.s.size() != g.edges.size())
    throw GraphError("bk_probabilities: strength map does not cover the graph");
  double rho = bk_rho(g.n, d) * rho_scale;
  SampleProbabilities out;
  out.p.reserve(g.edges.size());
  for (double s : strengths.s) {
    if (!(s > 0.0)) throw GraphError("bk_probabilities: missing or non-positive strength");
    out.p.push_back(std::min(1.0, rho / (eps * eps * s)));
  }
  return out;
}

Sparsifier oversample(const WeightedGraph& g, const SampleProbabilities& probs,
                      const CoinSource& coins) {
  if (probs.p.size() != g.edges.size())
    throw GraphError("oversample: probabilities do not cover the graph");
  Sparsifier out;
  out.n = g.n;
  for (uint64_t t = 0; t < g.edges.size(); ++t) {
    double p = probs.p[t];
    if (!(p > 0.0) || p > 1.0) throw GraphError("oversample: probability outside (0, 1]");
    if (coins.coin(t, 0, 0, CoinRole::Bk) < p) {
      const WeightedEdge& e = g.edges[t];
      out.edges.push_back({e.u, e.v, e.w / p, t, 0, p});
    }
  }
  return out;
}

Sparsifier oversample(const WeightedGraph& g, const SampleProbabilities& probs,
                      const CoinSource& coins, const StrengthMap& strengths, double eps, double d,
                      double rho_scale) {
  SampleProbabilities theory = bk_probabilities(g, strengths, eps, d, rho_scale);
  for (size_t t = 0; t < theory.p.size(); ++t)
    if (probs.p[t] < theory.p[t])
      throw GraphError("oversample: supplied probability below the theory probability at edge " +
                       std::to_string(t));
  return oversample(g, probs, coins);
}

Sparsifier bk_sample(const WeightedGraph& g, const StrengthMap& strengths, double eps, double d,
                     double rho_scale, const CoinSource& coins) {
  return oversample(g, bk_probabilities(g, strengths, eps, d, rho_scale), coins);
}

Sparsifier shrink_pipeline(const Sparsifier& in, double eps, double d, uint64_t seed,
                           double rho_scale, uint32_t oracle_max_n) {
  WeightedGraph g = in.graph();
  double cap = std::pow(static_cast<double>(g.n), 4.0);
  for (const WeightedEdge& e : g.edges)
    if (e.w > cap) throw GraphError("shrink_pipeline: edge weight exceeds the n^4 cap");
  StrengthMap strengths = exact_strengths(g, oracle_max_n);
  CoinOracle coins(seed);
  return bk_sample(g, strengths, eps / 3.0, d, rho_scale, coins);
}

}  // namespace cutsparse
