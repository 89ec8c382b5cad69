#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cutsparse/coin.hpp"
#include "cutsparse/graph.hpp"
#include "cutsparse/ladder.hpp"
#include "cutsparse/params.hpp"
#include "cutsparse/sparsifier.hpp"

namespace cutsparse {

/// Probability that at least one of w parallel unit edges is sampled at
/// level l, i.e. 1 - (1 - 2^-l)^w. Reduces to the plain Bernoulli 2^-l
/// for w == 1.
double weighted_insert_probability(uint32_t level, int64_t w);

/// Single-draw decision for a weight-w edge at cell (l, k): equivalent to
/// Binomial(w, 2^-l) >= 1. Throws when w exceeds the n^4 cap.
bool expand_weighted_edge(const CoinSource& coins, uint64_t edge_index, uint32_t level,
                          uint32_t round, int64_t w, uint64_t weight_cap,
                          CoinRole role = CoinRole::Geom);

/// One-pass streaming sparsifier over a refinement ladder. Strictly
/// single-threaded while processing; immutable once finished.
class OnePassSparsifier {
 public:
  OnePassSparsifier(const RefineParams& params, const CoinSource& coins,
                    CoinRole insert_role = CoinRole::Geom, CoinRole emit_role = CoinRole::Emit);

  /// Insertion phase: binary-search J*, then keep inserting into
  /// successive cells while the level coin comes up 1. Output phase:
  /// L' = level threshold after insertion, z' = min{1, 4rho/(eps^2 2^L')},
  /// emit with probability z' at weight w/z'. Returns the emitted edge,
  /// if any.
  std::optional<SparsifierEdge> process(const Edge& e);

  /// As process(), but with the ladder insertion weight (integer, for the
  /// binomial draw) decoupled from the emitted weight numerator. The
  /// two-pass second stage feeds rational weights this way: insert_w is
  /// the weight rounded up, emit_w the exact value. Emitted weight is
  /// emit_w / z'. coin_index keys the coins; callers replaying a stream
  /// pass the original stream position.
  std::optional<SparsifierEdge> process(uint32_t u, uint32_t v, int64_t insert_w, double emit_w,
                                        uint64_t coin_index);

  const Sparsifier& sample() const { return sample_; }
  Sparsifier take_sample() { return std::move(sample_); }
  const RefineParams& params() const { return params_; }
  RefinementLadder& ladder() { return ladder_; }

  uint64_t edges_seen() const { return t_; }
  uint64_t insertion_coin_flips() const { return coin_flips_; }
  /// |E \ X^J|: edges whose endpoints were NOT connected in D_{J-1} at
  /// arrival (before this edge's own insertions), per cell J in [1..LK].
  uint64_t not_connected_count(uint32_t j) const;

 private:
  RefineParams params_;
  const CoinSource& coins_;
  CoinRole insert_role_, emit_role_;
  RefinementLadder ladder_;
  Sparsifier sample_;
  uint64_t t_ = 0;
  uint64_t coin_flips_ = 0;
  uint64_t weight_cap_;
  std::vector<uint64_t> jstar_histogram_;  // index J* in [1..LK+1]
};

/// Folds process() over the stream. The returned state keeps the final
/// ladder for certificate extraction and diagnostics.
OnePassSparsifier onepass_state(const EdgeStream& stream, const RefineParams& params,
                                const CoinSource& coins);
Sparsifier onepass_sparsify(const EdgeStream& stream, const RefineParams& params,
                            const CoinSource& coins);

struct MultipassDiagnostics {
  uint64_t coin_flips = 0;
  uint64_t uf_ops = 0;
};

/// K-pass sparsifier: pass k inserts edge e into D_{l,k} for every l with
/// U_{l,k,e} = 1 and the endpoints connected in D_{l,k-1} (column 0 is
/// all-connected). A final sweep emits each edge with z' from the column-K
/// level threshold. The stream must be replayable; in-memory streams are.
Sparsifier multipass_sparsify(const EdgeStream& stream, const RefineParams& params,
                              const CoinSource& coins,
                              MultipassDiagnostics* diag = nullptr);

/// X(D_{l,K}) from a finished one-pass run: indices of stream edges whose
/// endpoints lie in different components of the final D_{l,K}. This is a
/// 2^l-connectivity certificate of the input.
std::vector<uint32_t> extract_certificate(OnePassSparsifier& state, const EdgeStream& stream,
                                          uint32_t l);

}  // namespace cutsparse
