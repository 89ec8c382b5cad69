#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cutsparse {

/// Disjoint-set forest with union by size and path compression.
/// find() mutates (compression), so a single instance is single-writer.
class UnionFind {
 public:
  explicit UnionFind(uint32_t n) : parent_(n, -1), components_(n) {}

  uint32_t size() const { return static_cast<uint32_t>(parent_.size()); }
  uint32_t components() const { return components_; }
  uint64_t ops() const { return ops_; }

  uint32_t find(uint32_t x) {
    check(x);
    ++ops_;
    uint32_t root = x;
    while (parent_[root] >= 0) root = static_cast<uint32_t>(parent_[root]);
    while (parent_[x] >= 0) {
      uint32_t next = static_cast<uint32_t>(parent_[x]);
      parent_[x] = static_cast<int32_t>(root);
      x = next;
    }
    return root;
  }

  bool connected(uint32_t a, uint32_t b) { return find(a) == find(b); }

  /// Returns true iff the roots differed (component count drops by 1).
  bool unite(uint32_t a, uint32_t b) {
    ++ops_;
    uint32_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (parent_[ra] > parent_[rb]) std::swap(ra, rb);  // ra has the larger tree
    parent_[ra] += parent_[rb];
    parent_[rb] = static_cast<int32_t>(ra);
    --components_;
    return true;
  }

 private:
  void check(uint32_t x) const {
    if (x >= parent_.size()) throw std::out_of_range("UnionFind: id out of range");
  }

  std::vector<int32_t> parent_;  // negative size at roots
  uint32_t components_;
  uint64_t ops_ = 0;
};

}  // namespace cutsparse
