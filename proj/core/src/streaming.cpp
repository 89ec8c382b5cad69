#include "cutsparse/streaming.hpp"

#include <cmath>
#include <stdexcept>

namespace cutsparse {

double weighted_insert_probability(uint32_t level, int64_t w) {
  if (w < 1) throw std::invalid_argument("weighted_insert_probability: w must be >= 1");
  double p = std::ldexp(1.0, -static_cast<int>(level));
  if (w == 1) return p;
  // 1 - (1-p)^w via expm1/log1p to stay accurate for tiny p.
  return -std::expm1(static_cast<double>(w) * std::log1p(-p));
}

bool expand_weighted_edge(const CoinSource& coins, uint64_t edge_index, uint32_t level,
                          uint32_t round, int64_t w, uint64_t weight_cap, CoinRole role) {
  if (w < 1) throw std::invalid_argument("expand_weighted_edge: w must be >= 1");
  if (static_cast<uint64_t>(w) > weight_cap)
    throw std::invalid_argument("expand_weighted_edge: weight exceeds cap");
  return coins.coin(edge_index, level, round, role) < weighted_insert_probability(level, w);
}

namespace {

uint64_t weight_cap_for(uint32_t n) {
  // W = n^4, saturated to avoid overflow for large n.
  long double cap = std::pow(static_cast<long double>(n), 4.0L);
  if (cap > static_cast<long double>(UINT64_MAX)) return UINT64_MAX;
  return static_cast<uint64_t>(cap);
}

}  // namespace

OnePassSparsifier::OnePassSparsifier(const RefineParams& params, const CoinSource& coins,
                                     CoinRole insert_role, CoinRole emit_role)
    : params_(params),
      coins_(coins),
      insert_role_(insert_role),
      emit_role_(emit_role),
      ladder_(params.n, params.L, params.K),
      weight_cap_(weight_cap_for(params.n)),
      jstar_histogram_(static_cast<size_t>(params.L) * params.K + 2, 0) {
  params_.validate();
  sample_.n = params.n;
}

std::optional<SparsifierEdge> OnePassSparsifier::process(const Edge& e) {
  return process(e.u, e.v, e.w, static_cast<double>(e.w), t_);
}

std::optional<SparsifierEdge> OnePassSparsifier::process(uint32_t u, uint32_t v, int64_t insert_w,
                                                         double emit_w, uint64_t coin_index) {
  if (u >= params_.n || v >= params_.n)
    throw std::out_of_range("OnePassSparsifier: endpoint out of range");
  ++t_;
  const uint64_t t = coin_index;
  const Edge e{u, v, insert_w};
  const uint32_t cells = ladder_.cell_count();

  // Insertion phase. Cells below J* are skipped: the endpoints are
  // already connected there and an insertion would be a no-op. From J*
  // upward each cell draws its level coin; the first 0 stops the run,
  // since no later cell can satisfy the D_{J-1} connectivity guard.
  uint32_t jstar = ladder_.threshold(e.u, e.v);
  jstar_histogram_[jstar] += 1;
  for (uint32_t j = jstar; j <= cells; ++j) {
    uint32_t l = ladder_.level_of(j);
    ++coin_flips_;
    if (!expand_weighted_edge(coins_, t, l, ladder_.round_of(j), e.w, weight_cap_, insert_role_))
      break;
    ladder_.insert(j, e.u, e.v);
  }

  // Output phase.
  uint32_t level = ladder_.level_threshold(e.u, e.v);
  double z = params_.keep_probability(level);
  if (coins_.coin(t, 0, 0, emit_role_) < z) {
    SparsifierEdge kept{e.u, e.v, emit_w / z, t, level, z};
    sample_.edges.push_back(kept);
    return kept;
  }
  return std::nullopt;
}

uint64_t OnePassSparsifier::not_connected_count(uint32_t j) const {
  if (j < 1 || j > ladder_.cell_count())
    throw std::out_of_range("not_connected_count: cell out of range");
  // An edge with threshold J* was not connected in D_{J-1} iff J* <= J-1.
  uint64_t total = 0;
  for (uint32_t jstar = 1; jstar + 1 <= j; ++jstar) total += jstar_histogram_[jstar];
  return total;
}

OnePassSparsifier onepass_state(const EdgeStream& stream, const RefineParams& params,
                                const CoinSource& coins) {
  OnePassSparsifier state(params, coins);
  for (const Edge& e : stream.edges) state.process(e);
  return state;
}

Sparsifier onepass_sparsify(const EdgeStream& stream, const RefineParams& params,
                            const CoinSource& coins) {
  return onepass_state(stream, params, coins).take_sample();
}

namespace {

/// Largest l such that at least one of w parallel copies has fair coins
/// coming up heads through level l; a single uniform draw of
/// max of w geometric run lengths: P[result >= l] = 1 - (1 - 2^-l)^w.
uint32_t max_heads_run(double u, int64_t w, uint32_t L) {
  uint32_t l = 0;
  while (l < L && u < weighted_insert_probability(l + 1, w)) ++l;
  return l;
}

}  // namespace

Sparsifier multipass_sparsify(const EdgeStream& stream, const RefineParams& params,
                              const CoinSource& coins, MultipassDiagnostics* diag) {
  params.validate();
  const uint32_t L = params.L, K = params.K;
  RefinementLadder ladder(params.n, L, K);
  uint64_t coin_flips = 0;

  for (uint32_t k = 1; k <= K; ++k) {
    // Column k-1 is frozen during pass k, so its connectivity threshold
    // over l is well defined and monotone.
    for (uint64_t t = 0; t < stream.edges.size(); ++t) {
      const Edge& e = stream.edges[t];
      uint32_t lmax = L;  // D_{l,0} is all-connected
      if (k > 1) {
        uint32_t lo = 1, hi = L + 1;
        while (lo < hi) {
          uint32_t mid = lo + (hi - lo) / 2;
          if (ladder.connected(ladder.cell_index(mid, k - 1), e.u, e.v))
            lo = mid + 1;
          else
            hi = mid;
        }
        lmax = lo - 1;  // largest l still connected in column k-1
      }
      ++coin_flips;
      uint32_t run = max_heads_run(coins.coin(t, 0, k, CoinRole::Fair), e.w, L);
      for (uint32_t l = 1; l <= run && l <= lmax; ++l)
        ladder.insert(ladder.cell_index(l, k), e.u, e.v);
    }
  }

  Sparsifier out;
  out.n = params.n;
  for (uint64_t t = 0; t < stream.edges.size(); ++t) {
    const Edge& e = stream.edges[t];
    uint32_t level = ladder.level_threshold(e.u, e.v);
    double z = params.keep_probability(level);
    if (coins.coin(t, 0, 0, CoinRole::Emit) < z)
      out.edges.push_back({e.u, e.v, static_cast<double>(e.w) / z, t, level, z});
  }
  if (diag) {
    diag->coin_flips = coin_flips;
    diag->uf_ops = ladder.uf_ops();
  }
  return out;
}

std::vector<uint32_t> extract_certificate(OnePassSparsifier& state, const EdgeStream& stream,
                                          uint32_t l) {
  const RefineParams& p = state.params();
  if (l < 1 || l > p.L) throw std::out_of_range("extract_certificate: level out of range");
  if (stream.n != p.n) throw std::invalid_argument("extract_certificate: vertex count mismatch");
  std::vector<uint32_t> comp = state.ladder().component_ids(l, p.K);
  std::vector<uint32_t> cert;
  for (uint32_t t = 0; t < stream.edges.size(); ++t)
    if (comp[stream.edges[t].u] != comp[stream.edges[t].v]) cert.push_back(t);
  return cert;
}

}  // namespace cutsparse
