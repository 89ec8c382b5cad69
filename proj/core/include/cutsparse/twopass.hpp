#pragma once

#include <cstdint>
#include <vector>

#include "cutsparse/coin.hpp"
#include "cutsparse/graph.hpp"
#include "cutsparse/params.hpp"
#include "cutsparse/sparsifier.hpp"

namespace cutsparse {

/// Settings for the two-pass sparsifier. The first pass admits each edge
/// with probability p1 = min{1, 4/log2 n}; the second pass keeps edge e
/// with min{1, rho n^delta / (eps^2 s''_e)} where s'' comes from a
/// truncated binary search over the frozen pass-one ladder column.
struct TwoPassParams {
  uint32_t n = 0;
  double delta = 0.25;
  double eps = 0.5;
  double d = 1.0;
  double rho_scale = 1.0;
  uint64_t seed = 0;
  uint32_t L = 1;
  uint32_t K = 1;

  static TwoPassParams defaults(uint32_t n, double delta = 0.25);

  double p1() const;       // min{1, 4/log2 n}
  double n_delta() const;  // n^delta
  RefineParams refine_params() const;
  void validate() const;
};

/// Final component ids of the column-K cells D*_l = D_{l,K}, l = 1..L,
/// captured after pass one. Chain-refined over l: connected at level l
/// implies connected at every level below.
class FrozenLadderColumn {
 public:
  explicit FrozenLadderColumn(std::vector<std::vector<uint32_t>> components_per_level);

  uint32_t levels() const { return static_cast<uint32_t>(components_.size()); }
  uint32_t n() const { return components_.empty() ? 0 : static_cast<uint32_t>(components_[0].size()); }

  bool connected(uint32_t l, uint32_t u, uint32_t v) const {
    return components_[l - 1][u] == components_[l - 1][v];
  }

  /// Audit of the refinement chain over l.
  bool chain_refined() const;

 private:
  std::vector<std::vector<uint32_t>> components_;  // index l-1
};

struct PassOneResult {
  FrozenLadderColumn column;
  std::vector<uint32_t> admitted;  // stream indices that passed the prefilter
};

PassOneResult pass_one(const EdgeStream& stream, const TwoPassParams& params,
                       const CoinSource& coins);

struct TruncatedEstimate {
  uint32_t lo = 1;   // final lower interval end; the estimate is 2^lo
  uint32_t hi = 1;   // final upper interval end
  double s = 2.0;    // s'' = 2^lo
  uint32_t probes = 0;
};

/// Binary search over l in [1..L+1] for the least level where (u, v) are
/// not connected in D*_l, stopped once the interval is at most delta*L
/// wide. The untruncated search returns s'' = 2^{L'}; truncation keeps
/// the estimate within a factor 2^ceil(delta*L) of that, from below.
TruncatedEstimate truncated_strength_estimate(const FrozenLadderColumn& column, uint32_t u,
                                              uint32_t v, double delta);

struct TwoPassDiagnostics {
  uint64_t pass1_admitted = 0;
  uint64_t pass2_kept = 0;       // edges surviving the p_e sampling
  uint64_t search_probes = 0;    // connectivity probes in pass two
  uint64_t intermediate_edges = 0;  // output of the fresh one-pass run
};

/// Full pipeline: pass one over stream_pass1, truncated estimation and
/// re-sampling over stream_pass2 into a fresh one-pass run, then the
/// Benczur-Karger shrink. The two streams must replay the identical edge
/// sequence (checked by count and checksum).
Sparsifier twopass_sparsify(const EdgeStream& stream_pass1, const EdgeStream& stream_pass2,
                            const TwoPassParams& params, TwoPassDiagnostics* diag = nullptr,
                            uint32_t oracle_max_n = 2000);

}  // namespace cutsparse
