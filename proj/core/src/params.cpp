#include "cutsparse/params.hpp"

#include <cmath>
#include <stdexcept>

namespace cutsparse {

RefineParams RefineParams::defaults(uint32_t n, int64_t max_weight) {
  if (n < 1) throw std::invalid_argument("RefineParams: n must be >= 1");
  if (max_weight < 1) throw std::invalid_argument("RefineParams: max_weight must be >= 1");
  RefineParams p;
  p.n = n;
  double nw = static_cast<double>(n) * static_cast<double>(max_weight);
  p.L = static_cast<uint32_t>(std::max(1.0, std::ceil(std::log2(2.0 * nw))));
  p.K = static_cast<uint32_t>(std::ceil(std::log(nw) / std::log(4.0 / 3.0))) + 1;
  return p;
}

double RefineParams::rho_theory() const {
  return 16.0 * (d + 2.0) * std::log(static_cast<double>(n));
}

double RefineParams::keep_probability(uint32_t level) const {
  if (level > L) return 1.0;  // endpoints never separated: keep, weight 1
  double z = phi() / (eps * eps * std::ldexp(1.0, static_cast<int>(level)));
  return z < 1.0 ? z : 1.0;
}

void RefineParams::validate() const {
  if (n < 1) throw std::invalid_argument("RefineParams: n must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("RefineParams: eps must be > 0");
  if (!(d > 0.0)) throw std::invalid_argument("RefineParams: d must be > 0");
  if (!(rho_scale > 0.0)) throw std::invalid_argument("RefineParams: rho_scale must be > 0");
  if (L < 1 || K < 1) throw std::invalid_argument("RefineParams: L and K must be >= 1");
}

}  // namespace cutsparse
