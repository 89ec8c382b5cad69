#include "cutsparse/refinement.hpp"

#include <cmath>
#include <stdexcept>

#include "cutsparse/union_find.hpp"

namespace cutsparse {

Partition Partition::whole(uint32_t n) {
  return Partition(std::vector<uint32_t>(n, 0));
}

Partition Partition::singletons(uint32_t n) {
  std::vector<uint32_t> ids(n);
  for (uint32_t v = 0; v < n; ++v) ids[v] = v;
  return Partition(std::move(ids));
}

Partition::Partition(std::vector<uint32_t> class_of) : class_of_(std::move(class_of)) {
  // Renumber class ids to be dense.
  std::vector<uint32_t> remap(class_of_.size(), UINT32_MAX);
  uint32_t next = 0;
  for (auto& c : class_of_) {
    if (c >= class_of_.size()) throw std::invalid_argument("Partition: class id out of range");
    if (remap[c] == UINT32_MAX) remap[c] = next++;
    c = remap[c];
  }
  class_count_ = next;
}

bool Partition::refines(const Partition& coarser) const {
  if (n() != coarser.n()) return false;
  // Each of our classes must map into exactly one coarser class.
  std::vector<uint32_t> image(class_count_, UINT32_MAX);
  for (uint32_t v = 0; v < n(); ++v) {
    uint32_t mine = class_of_[v];
    uint32_t theirs = coarser.class_of(v);
    if (image[mine] == UINT32_MAX)
      image[mine] = theirs;
    else if (image[mine] != theirs)
      return false;
  }
  return true;
}

Partition refine(const Partition& s, double p, const EdgeStream& edges,
                 const EdgeSampler& sampler) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("refine: p must be in [0, 1]");
  UnionFind uf(s.n());
  for (uint64_t t = 0; t < edges.edges.size(); ++t) {
    const Edge& e = edges.edges[t];
    if (!s.same_class(e.u, e.v)) continue;  // unions never cross classes of s
    if (sampler(t) < p) uf.unite(e.u, e.v);
  }
  std::vector<uint32_t> ids(s.n());
  for (uint32_t v = 0; v < s.n(); ++v) ids[v] = uf.find(v);
  return Partition(std::move(ids));
}

std::vector<uint32_t> crossing_edges(const Partition& s, const EdgeStream& edges) {
  std::vector<uint32_t> out;
  for (uint32_t t = 0; t < edges.edges.size(); ++t)
    if (!s.same_class(edges.edges[t].u, edges.edges[t].v)) out.push_back(t);
  return out;
}

RefinementSampleResult refinement_sample(const EdgeStream& stream, const RefineParams& params,
                                         const CoinSource& coins, CoinRole sample_role,
                                         bool audit_refines) {
  params.validate();
  const uint32_t n = stream.n;
  const uint32_t L = params.L, K = params.K;

  // S_{l,k} grid; only the current column is needed, kept per level.
  std::vector<Partition> column(L, Partition::whole(n));
  for (uint32_t k = 1; k <= K; ++k) {
    for (uint32_t l = 1; l <= L; ++l) {
      double p = std::ldexp(1.0, -static_cast<int>(l));
      Partition next = refine(
          column[l - 1], p, stream,
          [&](uint64_t t) { return coins.coin(t, l, k, sample_role); });
      if (audit_refines && !next.refines(column[l - 1]))
        throw std::logic_error("refinement_sample: refine output does not refine its input");
      column[l - 1] = std::move(next);
    }
  }

  RefinementSampleResult result;
  result.sample.n = n;
  result.levels.resize(stream.edges.size());
  for (uint64_t t = 0; t < stream.edges.size(); ++t) {
    const Edge& e = stream.edges[t];
    // L(e): least l with the endpoints in different classes of S_{l,K}.
    // Levels are sampled independently here, so connectivity is not
    // monotone over l and the scan has to be linear.
    uint32_t level = L + 1;
    for (uint32_t l = 1; l <= L; ++l) {
      if (!column[l - 1].same_class(e.u, e.v)) {
        level = l;
        break;
      }
    }
    result.levels[t] = level;
    double z = params.keep_probability(level);
    if (coins.coin(t, 0, 0, CoinRole::Emit) < z)
      result.sample.edges.push_back({e.u, e.v, static_cast<double>(e.w) / z, t, level, z});
  }
  return result;
}

}  // namespace cutsparse
