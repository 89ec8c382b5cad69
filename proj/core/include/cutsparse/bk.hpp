#pragma once

#include <cstdint>
#include <vector>

#include "cutsparse/coin.hpp"
#include "cutsparse/graph.hpp"
#include "cutsparse/sparsifier.hpp"
#include "cutsparse/strength.hpp"

namespace cutsparse {

enum class ProbProvenance { Theory, Overridden, Estimated };

/// Per-edge keep probabilities. Theory-derived probabilities are
/// p_e = min{rho/(eps^2 s_e), 1} with rho = 16(d+2) ln n.
struct SampleProbabilities {
  std::vector<double> p;
  ProbProvenance provenance = ProbProvenance::Theory;
};

/// rho = 16(d+2) ln n.
double bk_rho(uint32_t n, double d);

SampleProbabilities bk_probabilities(const WeightedGraph& g, const StrengthMap& strengths,
                                     double eps, double d, double rho_scale = 1.0);

/// Independent per-edge keep/drop with the theory probabilities; a kept
/// edge carries weight w_e / p_e.
Sparsifier bk_sample(const WeightedGraph& g, const StrengthMap& strengths, double eps, double d,
                     double rho_scale, const CoinSource& coins);

/// Sampling with caller-supplied probabilities, weight w_e / p_e. Any
/// p_e in (0, 1] preserves unbiasedness; domination of the theory
/// probabilities is the caller's contract.
Sparsifier oversample(const WeightedGraph& g, const SampleProbabilities& probs,
                      const CoinSource& coins);

/// Same, but asserts the domination contract p_e >= theory p_e against a
/// strength map before sampling.
Sparsifier oversample(const WeightedGraph& g, const SampleProbabilities& probs,
                      const CoinSource& coins, const StrengthMap& strengths, double eps, double d,
                      double rho_scale = 1.0);

/// Post-processing stage that shrinks a sparsifier: exact strengths of
/// the (small) weighted input, then bk_sample at eps/3 so that two
/// composed stages stay within eps overall. Refuses inputs whose weights
/// exceed the n^4 cap or whose size exceeds the strength oracle limit.
Sparsifier shrink_pipeline(const Sparsifier& in, double eps, double d, uint64_t seed,
                           double rho_scale = 1.0, uint32_t oracle_max_n = 500);

}  // namespace cutsparse
