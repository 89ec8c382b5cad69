#include "cutsparse/twopass.hpp"

#include <cmath>
#include <stdexcept>

#include "cutsparse/bk.hpp"
#include "cutsparse/streaming.hpp"

namespace cutsparse {

TwoPassParams TwoPassParams::defaults(uint32_t n, double delta) {
  RefineParams base = RefineParams::defaults(n);
  TwoPassParams p;
  p.n = n;
  p.delta = delta;
  p.eps = base.eps;
  p.d = base.d;
  p.L = base.L;
  p.K = base.K;
  return p;
}

double TwoPassParams::p1() const {
  double lg = std::log2(static_cast<double>(n));
  if (lg <= 4.0) return 1.0;
  return 4.0 / lg;
}

double TwoPassParams::n_delta() const { return std::pow(static_cast<double>(n), delta); }

RefineParams TwoPassParams::refine_params() const {
  RefineParams p;
  p.n = n;
  p.eps = eps;
  p.d = d;
  p.rho_scale = rho_scale;
  p.L = L;
  p.K = K;
  p.seed = seed;
  return p;
}

void TwoPassParams::validate() const {
  refine_params().validate();
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("TwoPassParams: delta must be in (0, 1)");
}

FrozenLadderColumn::FrozenLadderColumn(std::vector<std::vector<uint32_t>> components_per_level)
    : components_(std::move(components_per_level)) {
  if (components_.empty()) throw std::invalid_argument("FrozenLadderColumn: no levels");
  for (const auto& level : components_)
    if (level.size() != components_[0].size())
      throw std::invalid_argument("FrozenLadderColumn: inconsistent vertex counts");
}

bool FrozenLadderColumn::chain_refined() const {
  // Every class at level l must lie inside one class at level l-1.
  const uint32_t nverts = n();
  for (uint32_t l = 2; l <= levels(); ++l) {
    std::vector<uint32_t> image(nverts, UINT32_MAX);
    for (uint32_t v = 0; v < nverts; ++v) {
      uint32_t fine = components_[l - 1][v];
      uint32_t coarse = components_[l - 2][v];
      if (image[fine] == UINT32_MAX)
        image[fine] = coarse;
      else if (image[fine] != coarse)
        return false;
    }
  }
  return true;
}

PassOneResult pass_one(const EdgeStream& stream, const TwoPassParams& params,
                       const CoinSource& coins) {
  params.validate();
  if (stream.n != params.n) throw GraphError("pass_one: vertex count mismatch");
  const double p1 = params.p1();

  OnePassSparsifier state(params.refine_params(), coins);
  std::vector<uint32_t> admitted;
  for (uint32_t t = 0; t < stream.edges.size(); ++t) {
    if (coins.coin(t, 0, 0, CoinRole::Prefilter) < p1) {
      const Edge& e = stream.edges[t];
      state.process(e.u, e.v, e.w, static_cast<double>(e.w), t);
      admitted.push_back(t);
    }
  }

  std::vector<std::vector<uint32_t>> components;
  components.reserve(params.L);
  for (uint32_t l = 1; l <= params.L; ++l)
    components.push_back(state.ladder().component_ids(l, params.K));
  return PassOneResult{FrozenLadderColumn(std::move(components)), std::move(admitted)};
}

TruncatedEstimate truncated_strength_estimate(const FrozenLadderColumn& column, uint32_t u,
                                              uint32_t v, double delta) {
  const uint32_t L = column.levels();
  TruncatedEstimate r;
  r.lo = 1;
  r.hi = L + 1;
  // Invariant: connected at all levels below lo; not connected at hi (or
  // hi = L+1). Stop once the interval is no wider than delta*L.
  while (static_cast<double>(r.hi - r.lo) > delta * static_cast<double>(L)) {
    uint32_t mid = r.lo + (r.hi - r.lo) / 2;
    ++r.probes;
    if (u != v && !column.connected(mid, u, v))
      r.hi = mid;
    else
      r.lo = mid + 1;
    if (r.lo >= r.hi) break;
  }
  r.s = std::ldexp(1.0, static_cast<int>(std::min(r.lo, L + 1)));
  return r;
}

namespace {

uint64_t stream_checksum(const EdgeStream& s) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto feed = [&h](uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  feed(s.n);
  for (const Edge& e : s.edges) {
    feed(e.u);
    feed(e.v);
    feed(static_cast<uint64_t>(e.w));
  }
  return h;
}

}  // namespace

Sparsifier twopass_sparsify(const EdgeStream& stream_pass1, const EdgeStream& stream_pass2,
                            const TwoPassParams& params, TwoPassDiagnostics* diag,
                            uint32_t oracle_max_n) {
  params.validate();
  if (stream_pass1.m() != stream_pass2.m() ||
      stream_checksum(stream_pass1) != stream_checksum(stream_pass2))
    throw GraphError("twopass_sparsify: the two stream handles do not replay the same sequence");

  CoinOracle coins(params.seed);
  PassOneResult first = pass_one(stream_pass1, params, coins);

  const double rho = params.refine_params().rho();
  const double p_scale = rho * params.n_delta() / (params.eps * params.eps);
  const double weight_cap = std::pow(static_cast<double>(params.n), 4.0);

  // Fresh Algorithm-3 invocation with its own coin roles, so pass-one and
  // pass-two randomness never collide on equal (edge, level, round) keys.
  OnePassSparsifier second(params.refine_params(), coins, CoinRole::Geom2, CoinRole::Emit2);

  TwoPassDiagnostics d;
  d.pass1_admitted = first.admitted.size();
  for (uint32_t t = 0; t < stream_pass2.edges.size(); ++t) {
    const Edge& e = stream_pass2.edges[t];
    TruncatedEstimate est =
        truncated_strength_estimate(first.column, e.u, e.v, params.delta);
    d.search_probes += est.probes;
    double p_e = std::min(1.0, p_scale / est.s);
    if (coins.coin(t, 0, 0, CoinRole::Pass2Keep) >= p_e) continue;
    ++d.pass2_kept;
    double w = static_cast<double>(e.w) / p_e;
    // Rounding the insertion weight up only raises the insertion
    // probability, which is oversampling-safe; the cap bounds the
    // binomial expansion.
    int64_t insert_w = static_cast<int64_t>(std::min(std::ceil(w), weight_cap));
    second.process(e.u, e.v, insert_w, w, t);
  }

  Sparsifier intermediate = second.take_sample();
  d.intermediate_edges = intermediate.size();
  if (diag) *diag = d;
  return shrink_pipeline(intermediate, params.eps, params.d, params.seed, params.rho_scale,
                         oracle_max_n);
}

}  // namespace cutsparse
