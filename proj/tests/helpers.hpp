#pragma once

#include "cutsparse/coin.hpp"

namespace cutsparse::testing {

/// Coin source returning the same value for every key. 0.0 forces every
/// Bernoulli comparison to succeed; anything close to 1 forces failure.
class ConstCoins final : public CoinSource {
 public:
  explicit ConstCoins(double value) : value_(value) {}
  double coin(uint64_t, uint32_t, uint32_t, CoinRole) const override { return value_; }

 private:
  double value_;
};

}  // namespace cutsparse::testing
