#pragma once

#include <cstdint>

namespace cutsparse {

/// Distinct randomness streams. Values are part of the coin key, so two
/// roles never collide even for equal (edge, level, round).
enum class CoinRole : uint32_t {
  Fair = 1,       // A_{l,k,e}: fair coins for the multi-pass algorithm
  Geom = 2,       // A'_{l,k,e}: level-l insertion coins, Pr[1] = 2^-l
  Emit = 3,       // output-phase keep/drop
  Alg1 = 4,       // uniform samples drawn by the reference refine rounds
  Prefilter = 5,  // two-pass first-pass admission
  Pass2Keep = 6,  // two-pass second-pass keep/drop
  Bk = 7,         // Benczur-Karger keep/drop
  Geom2 = 8,      // fresh ladder inside the two-pass second pass
  Emit2 = 9,      // output phase of that fresh ladder
};

/// Source of the Bernoulli variables used by every sampler. A value is a
/// pure function of (seed, edge index, level, round, role): identical keys
/// give identical values across calls, runs, and algorithms, which is what
/// makes replay and the coupling checks possible without coin tapes.
class CoinSource {
 public:
  virtual ~CoinSource() = default;
  /// Uniform value in [0, 1).
  virtual double coin(uint64_t edge_index, uint32_t level, uint32_t round,
                      CoinRole role) const = 0;
};

class CoinOracle final : public CoinSource {
 public:
  explicit CoinOracle(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  double coin(uint64_t edge_index, uint32_t level, uint32_t round,
              CoinRole role) const override;

 private:
  uint64_t seed_;
};

}  // namespace cutsparse
