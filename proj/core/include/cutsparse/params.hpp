#pragma once

#include <cstdint>

namespace cutsparse {

/// Sampling parameters shared by the reference, multi-pass, and one-pass
/// samplers. Defaults reproduce the theory settings:
///   rho = 16(d+2) ln n,  phi = 4 rho,
///   L   = ceil(log2(2 n W)),  K = ceil(log_{4/3}(n W)) + 1.
/// rho_scale multiplies rho for desk-scale experiments where the theory
/// constant saturates every probability; reports carry both values.
struct RefineParams {
  uint32_t n = 0;
  double eps = 0.5;
  double d = 1.0;
  double rho_scale = 1.0;
  uint32_t L = 1;
  uint32_t K = 1;
  uint64_t seed = 0;

  static RefineParams defaults(uint32_t n, int64_t max_weight = 1);

  double rho_theory() const;
  double rho() const { return rho_theory() * rho_scale; }
  double phi() const { return 4.0 * rho(); }

  /// z = min{1, 4 rho / (eps^2 2^level)}; levels beyond L (an edge whose
  /// endpoints never separate) keep the edge with probability 1.
  double keep_probability(uint32_t level) const;

  void validate() const;  // throws on nonsensical values
};

}  // namespace cutsparse
