#include "cutsparse/ladder.hpp"

#include <stdexcept>

namespace cutsparse {

RefinementLadder::RefinementLadder(uint32_t n, uint32_t L, uint32_t K)
    : n_(n), L_(L), K_(K), cells_(static_cast<size_t>(L) * K), insertions_(cells_.size(), 0) {
  if (L < 1 || K < 1) throw std::invalid_argument("RefinementLadder: L, K must be >= 1");
}

UnionFind& RefinementLadder::cell(uint32_t j) {
  auto& slot = cells_[j - 1];
  if (!slot) slot = std::make_unique<UnionFind>(n_);
  return *slot;
}

bool RefinementLadder::connected(uint32_t j, uint32_t u, uint32_t v) {
  if (j == 0) return true;  // virtual D_0
  if (u == v) return true;
  auto& slot = cells_[j - 1];
  if (!slot) return false;  // identity partition
  return slot->connected(u, v);
}

bool RefinementLadder::insert(uint32_t j, uint32_t u, uint32_t v) {
  bool merged = cell(j).unite(u, v);
  if (merged) ++insertions_[j - 1];
  return merged;
}

uint32_t RefinementLadder::threshold(uint32_t u, uint32_t v) {
  uint32_t lo = 1, hi = cell_count() + 1;
  while (lo < hi) {
    uint32_t mid = lo + (hi - lo) / 2;
    if (connected(mid, u, v))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

uint32_t RefinementLadder::level_threshold(uint32_t u, uint32_t v) {
  uint32_t lo = 1, hi = L_ + 1;
  while (lo < hi) {
    uint32_t mid = lo + (hi - lo) / 2;
    if (connected(cell_index(mid, K_), u, v))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

std::vector<uint32_t> RefinementLadder::component_ids(uint32_t l, uint32_t k) {
  std::vector<uint32_t> ids(n_);
  uint32_t j = cell_index(l, k);
  auto& slot = cells_[j - 1];
  if (!slot) {
    for (uint32_t v = 0; v < n_; ++v) ids[v] = v;
  } else {
    for (uint32_t v = 0; v < n_; ++v) ids[v] = slot->find(v);
  }
  return ids;
}

bool RefinementLadder::chain_monotone(uint32_t u, uint32_t v) {
  bool seen_false = false;
  for (uint32_t j = 1; j <= cell_count(); ++j) {
    bool c = connected(j, u, v);
    if (c && seen_false) return false;
    if (!c) seen_false = true;
  }
  return true;
}

uint64_t RefinementLadder::uf_ops() const {
  uint64_t total = 0;
  for (const auto& c : cells_)
    if (c) total += c->ops();
  return total;
}

uint64_t RefinementLadder::total_insertions() const {
  uint64_t total = 0;
  for (uint64_t x : insertions_) total += x;
  return total;
}

}  // namespace cutsparse
