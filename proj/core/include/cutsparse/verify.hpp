#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

/// Which cuts verify_sparsifier compares.
///   All       -- every cut (subsets containing vertex 0), n <= 20
///   Random    -- N uniform nonempty proper subsets
///   MinCut    -- global minimum cut values of the two graphs
struct VerifyMode {
  enum class Kind { All, Random, MinCut } kind = Kind::All;
  uint64_t random_cuts = 0;

  static VerifyMode all() { return {Kind::All, 0}; }
  static VerifyMode random(uint64_t cuts) { return {Kind::Random, cuts}; }
  static VerifyMode mincut() { return {Kind::MinCut, 0}; }
  /// "all", "random:N", or "mincut".
  static VerifyMode parse(const std::string& text);
  std::string str() const;
};

struct QualityReport {
  uint64_t cuts_checked = 0;
  double max_rel_error = 0.0;
  double mincut_rel_error = -1.0;  // -1 when the mode did not compare min cuts
  uint64_t sample_edges = 0;
  double total_weight = 0.0;
  std::string mode;
  bool pass = false;
};

/// Compares cut values of g and its candidate sparsifier h. A cut of
/// value 0 in g must have value 0 in h; any other outcome fails with an
/// infinite relative error.
QualityReport verify_sparsifier(const WeightedGraph& g, const WeightedGraph& h, double eps,
                                const VerifyMode& mode, uint64_t seed = 0);

struct CertificateViolation {
  std::vector<uint32_t> cut_side;
  uint32_t edge_index;
};

struct CertificateReport {
  bool ok = false;
  uint64_t cuts_checked = 0;
  uint64_t certificate_edges = 0;
  std::vector<CertificateViolation> violations;
};

/// True iff every edge crossing a cut of value <= 2^l belongs to the
/// certificate (given as indices into g.edges). Enumerates all cuts;
/// n <= 16.
CertificateReport verify_certificate(const WeightedGraph& g,
                                     const std::vector<uint32_t>& cert_edge_indices, uint32_t l);

struct ComponentShrinkResult {
  double pass_rate = 0.0;  // fraction of trials with components <= gamma * n
  double gamma = 0.0;      // 7/8 + e^{-lambda/2}/8
  double p = 0.0;          // min{1, lambda/kappa}
};

/// Samples the edges of a kappa-connected graph with p = min{1, lambda/kappa}
/// per trial and counts connected components of the sample.
ComponentShrinkResult component_shrink_check(const WeightedGraph& g, double kappa, double lambda,
                                             uint32_t trials, uint64_t seed);

struct SizeScalingRow {
  uint32_t n = 0;
  double mean_edges = 0.0;
};

struct SizeScalingReport {
  std::vector<SizeScalingRow> rows;
  std::vector<double> ratios;  // rows[i+1].mean_edges / rows[i].mean_edges
};

/// Mean sample size per input graph over the given seeds; run maps
/// (stream, seed) to an output edge count.
SizeScalingReport size_scaling_report(
    const std::function<size_t(const EdgeStream&, uint64_t)>& run,
    const std::vector<EdgeStream>& family, uint32_t seeds);

}  // namespace cutsparse
