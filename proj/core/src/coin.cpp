#include "cutsparse/coin.hpp"

namespace cutsparse {

namespace {

// splitmix64 finalizer; good avalanche for key mixing.
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double CoinOracle::coin(uint64_t edge_index, uint32_t level, uint32_t round,
                        CoinRole role) const {
  uint64_t h = mix(seed_ ^ 0xa0761d6478bd642fULL);
  h = mix(h ^ edge_index);
  h = mix(h ^ ((static_cast<uint64_t>(level) << 32) | round));
  h = mix(h ^ static_cast<uint64_t>(role));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace cutsparse
