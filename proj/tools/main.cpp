// Command-line driver: graph generation, sparsification, strength
// oracles, certificate extraction, and cut verification, with
// machine-readable JSON reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutsparse/bk.hpp"
#include "cutsparse/coin.hpp"
#include "cutsparse/graph.hpp"
#include "cutsparse/params.hpp"
#include "cutsparse/refinement.hpp"
#include "cutsparse/streaming.hpp"
#include "cutsparse/strength.hpp"
#include "cutsparse/twopass.hpp"
#include "cutsparse/verify.hpp"

namespace {

using nlohmann::json;
using namespace cutsparse;

/// CoinOracle wrapper counting every draw, for the run reports.
class CountingCoins final : public CoinSource {
 public:
  explicit CountingCoins(uint64_t seed) : inner_(seed) {}
  double coin(uint64_t edge_index, uint32_t level, uint32_t round,
              CoinRole role) const override {
    ++flips_;
    return inner_.coin(edge_index, level, round, role);
  }
  uint64_t flips() const { return flips_; }

 private:
  CoinOracle inner_;
  mutable uint64_t flips_ = 0;
};

EdgeStream read_stream(const std::string& path) {
  if (path == "-") return parse_edge_stream(std::cin);
  return load_edge_stream(path);
}

void write_sparsifier(const std::string& path, const Sparsifier& s) {
  WeightedGraph g = s.graph();
  if (path.empty() || path == "-") {
    write_weighted_graph(std::cout, g);
  } else {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    write_weighted_graph(out, g);
  }
}

struct SparsifyOptions {
  std::string algo;
  std::string in;
  std::string out;
  std::string strengths_file;
  double eps = 0.5;
  double d = 1.0;
  double rho_scale = 1.0;
  double delta = 0.25;
  uint64_t seed = 0;
  uint32_t trials = 1;
  int K_override = -1;
  int L_override = -1;
  bool shrink = false;
  bool delta_set = false;
};

RefineParams build_params(const SparsifyOptions& opt, const EdgeStream& stream, uint64_t seed) {
  RefineParams p = RefineParams::defaults(stream.n, stream.max_weight());
  p.eps = opt.eps;
  p.d = opt.d;
  p.rho_scale = opt.rho_scale;
  p.seed = seed;
  if (opt.K_override > 0) p.K = static_cast<uint32_t>(opt.K_override);
  if (opt.L_override > 0) p.L = static_cast<uint32_t>(opt.L_override);
  return p;
}

StrengthMap strengths_for(const SparsifyOptions& opt, const WeightedGraph& g) {
  if (opt.strengths_file.empty()) return exact_strengths(g);
  std::ifstream in(opt.strengths_file);
  if (!in) throw GraphError("cannot open " + opt.strengths_file);
  StrengthMap map;
  map.s.assign(g.edges.size(), 0.0);
  uint64_t t, u, v;
  double s;
  while (in >> t >> u >> v >> s) {
    if (t >= map.s.size()) throw GraphError("strengths file: edge index out of range");
    map.s[t] = s;
  }
  return map;
}

int cmd_sparsify(const SparsifyOptions& opt) {
  if (opt.delta_set && opt.algo != "twopass")
    throw GraphError("--delta is only meaningful with --algo twopass");
  if (opt.in == "-" && (opt.algo == "multipass" || opt.algo == "twopass"))
    throw GraphError(opt.algo + " requires a replayable file, not '-'");
  if (opt.trials > 1 && !opt.out.empty())
    throw GraphError("--out cannot be combined with --trials > 1");

  EdgeStream stream = read_stream(opt.in);
  bool file_out = !opt.out.empty() && opt.out != "-";
  std::ostream& report_out = (opt.out.empty() || file_out) ? std::cout : std::cerr;

  for (uint32_t trial = 0; trial < opt.trials; ++trial) {
    uint64_t seed = opt.seed + trial;
    RefineParams params = build_params(opt, stream, seed);
    CountingCoins coins(seed);
    uint64_t uf_ops = 0;
    Sparsifier result;

    auto start = std::chrono::steady_clock::now();
    if (opt.algo == "refsample") {
      result = refinement_sample(stream, params, coins).sample;
    } else if (opt.algo == "onepass") {
      OnePassSparsifier state = onepass_state(stream, params, coins);
      uf_ops = state.ladder().uf_ops();
      result = state.take_sample();
    } else if (opt.algo == "multipass") {
      MultipassDiagnostics diag;
      result = multipass_sparsify(stream, params, coins, &diag);
      uf_ops = diag.uf_ops;
    } else if (opt.algo == "twopass") {
      TwoPassParams tp = TwoPassParams::defaults(stream.n, opt.delta);
      tp.eps = opt.eps;
      tp.d = opt.d;
      tp.rho_scale = opt.rho_scale;
      tp.seed = seed;
      if (opt.K_override > 0) tp.K = static_cast<uint32_t>(opt.K_override);
      if (opt.L_override > 0) tp.L = static_cast<uint32_t>(opt.L_override);
      EdgeStream replay = load_edge_stream(opt.in);
      result = twopass_sparsify(stream, replay, tp);
    } else if (opt.algo == "bk") {
      WeightedGraph g = to_weighted(stream);
      result = bk_sample(g, strengths_for(opt, g), opt.eps, opt.d, opt.rho_scale, coins);
    } else {
      throw GraphError("unknown --algo " + opt.algo +
                       " (expected refsample|multipass|onepass|twopass|bk)");
    }
    if (opt.shrink && opt.algo != "twopass")
      result = shrink_pipeline(result, opt.eps, opt.d, seed, opt.rho_scale);
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    json report = {
        {"schema", 1},
        {"algorithm", opt.algo},
        {"n", stream.n},
        {"m", stream.m()},
        {"eps", opt.eps},
        {"d", opt.d},
        {"K", params.K},
        {"L", params.L},
        {"rho", params.rho_theory()},
        {"rho_scale", opt.rho_scale},
        {"seed", seed},
        {"sample_edges", result.size()},
        {"total_weight", result.total_weight()},
        {"elapsed_ms", elapsed},
        {"coin_flips", coins.flips()},
        {"uf_ops", uf_ops},
    };
    if (opt.algo == "twopass") report["delta"] = opt.delta;
    report_out << report.dump() << "\n";

    if (opt.trials == 1) write_sparsifier(opt.out, result);
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& sparsifier_path, double eps,
               const std::string& cuts, uint64_t seed) {
  std::ifstream gin(graph_path);
  if (!gin) throw GraphError("cannot open " + graph_path);
  WeightedGraph g = parse_weighted_graph(gin);
  std::ifstream hin(sparsifier_path);
  if (!hin) throw GraphError("cannot open " + sparsifier_path);
  WeightedGraph h = parse_weighted_graph(hin);

  QualityReport report = verify_sparsifier(g, h, eps, VerifyMode::parse(cuts), seed);
  json out = {
      {"schema", 1},
      {"mode", report.mode},
      {"cuts_checked", report.cuts_checked},
      {"max_rel_error", report.max_rel_error},
      {"sample_edges", report.sample_edges},
      {"total_weight", report.total_weight},
      {"pass", report.pass},
  };
  if (report.mincut_rel_error >= 0.0) out["mincut_rel_error"] = report.mincut_rel_error;
  std::cout << out.dump() << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refinement-sampling graph sparsifiers"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph in edge-list format");
  std::string gen_type, gen_order = "as_given", gen_out;
  uint32_t gen_n = 0, gen_c = 2, gen_s = 3, gen_rows = 2, gen_cols = 2;
  double gen_p = 0.5;
  uint64_t gen_seed = 0;
  gen->add_option("--type", gen_type, "gnp|star|clique_chain|grid")->required();
  gen->add_option("--n", gen_n, "vertex count (gnp, star)");
  gen->add_option("--p", gen_p, "edge probability (gnp)");
  gen->add_option("--c", gen_c, "clique count (clique_chain)");
  gen->add_option("--s", gen_s, "clique size (clique_chain)");
  gen->add_option("--rows", gen_rows, "grid rows");
  gen->add_option("--cols", gen_cols, "grid cols");
  gen->add_option("--seed", gen_seed, "generator and shuffle seed");
  gen->add_option("--order", gen_order, "as_given|random|sorted_by_endpoint|reversed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // --- sparsify ----------------------------------------------------------
  auto* sp = app.add_subcommand("sparsify", "run a sparsification algorithm");
  SparsifyOptions opt;
  sp->add_option("--algo", opt.algo, "refsample|multipass|onepass|twopass|bk")->required();
  sp->add_option("--in", opt.in, "input edge-list file, or '-' for stdin")->required();
  sp->add_option("--out", opt.out, "sparsifier output file (default stdout)");
  sp->add_option("--eps", opt.eps, "target cut error");
  sp->add_option("--d", opt.d, "failure exponent");
  sp->add_option("--rho-scale", opt.rho_scale, "multiplier on the theory rho");
  sp->add_option("--K", opt.K_override, "strengthening parameter override");
  sp->add_option("--L", opt.L_override, "level count override");
  sp->add_option("--seed", opt.seed, "coin seed");
  sp->add_option("--trials", opt.trials, "run this many consecutive seeds");
  auto* delta_opt = sp->add_option("--delta", opt.delta, "truncation parameter (twopass)");
  sp->add_option("--strengths", opt.strengths_file, "strengths file for --algo bk");
  sp->add_flag("--shrink", opt.shrink, "apply the Benczur-Karger shrink stage");

  // --- strength ----------------------------------------------------------
  auto* st = app.add_subcommand("strength", "per-edge strong connectivity");
  std::string st_in, st_method = "exact";
  st->add_option("--in", st_in, "input edge-list file")->required();
  st->add_option("--method", st_method, "exact|brute");

  // --- certificate -------------------------------------------------------
  auto* cert = app.add_subcommand("certificate", "extract a 2^l-connectivity certificate");
  std::string cert_in, cert_out;
  uint32_t cert_level = 1;
  uint64_t cert_seed = 0;
  double cert_eps = 0.5, cert_d = 1.0;
  cert->add_option("--in", cert_in, "input edge-list file")->required();
  cert->add_option("--level", cert_level, "certificate level l (threshold 2^l)")->required();
  cert->add_option("--seed", cert_seed, "coin seed");
  cert->add_option("--eps", cert_eps, "eps passed to the one-pass run");
  cert->add_option("--d", cert_d, "failure exponent");
  cert->add_option("--out", cert_out, "output file (default stdout)");

  // --- verify ------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "compare cuts of a graph and its sparsifier");
  std::string ver_graph, ver_sparsifier, ver_cuts = "all";
  double ver_eps = 0.5;
  uint64_t ver_seed = 0;
  ver->add_option("--graph", ver_graph, "original graph")->required();
  ver->add_option("--sparsifier", ver_sparsifier, "candidate sparsifier")->required();
  ver->add_option("--eps", ver_eps, "tolerance");
  ver->add_option("--cuts", ver_cuts, "all|random:N|mincut");
  ver->add_option("--seed", ver_seed, "seed for random cuts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      EdgeStream s;
      if (gen_type == "gnp")
        s = generate_gnp(gen_n, gen_p, gen_seed);
      else if (gen_type == "star")
        s = generate_star(gen_n);
      else if (gen_type == "clique_chain")
        s = generate_clique_chain(gen_c, gen_s);
      else if (gen_type == "grid")
        s = generate_grid(gen_rows, gen_cols);
      else
        throw GraphError("unknown --type " + gen_type);
      s = shuffle_stream(std::move(s), parse_stream_order(gen_order), gen_seed);
      if (gen_out.empty() || gen_out == "-") {
        write_edge_stream(std::cout, s);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw GraphError("cannot open " + gen_out + " for writing");
        write_edge_stream(out, s);
      }
      return 0;
    }
    if (sp->parsed()) {
      opt.delta_set = delta_opt->count() > 0;
      return cmd_sparsify(opt);
    }
    if (st->parsed()) {
      if (st_method != "brute" && st_method != "exact")
        throw GraphError("unknown --method " + st_method);
      EdgeStream stream = read_stream(st_in);
      WeightedGraph g = to_weighted(stream);
      StrengthMap map = st_method == "brute" ? brute_strengths(g) : exact_strengths(g);
      for (size_t t = 0; t < g.edges.size(); ++t)
        std::cout << t << " " << g.edges[t].u << " " << g.edges[t].v << " " << map.s[t] << "\n";
      return 0;
    }
    if (cert->parsed()) {
      EdgeStream stream = load_edge_stream(cert_in);
      RefineParams params = RefineParams::defaults(stream.n, stream.max_weight());
      params.eps = cert_eps;
      params.d = cert_d;
      params.seed = cert_seed;
      CoinOracle coins(cert_seed);
      OnePassSparsifier state = onepass_state(stream, params, coins);
      std::vector<uint32_t> cert_edges = extract_certificate(state, stream, cert_level);
      EdgeStream out_stream;
      out_stream.n = stream.n;
      for (uint32_t t : cert_edges) out_stream.edges.push_back(stream.edges[t]);
      if (cert_out.empty() || cert_out == "-") {
        write_edge_stream(std::cout, out_stream);
      } else {
        std::ofstream out(cert_out);
        if (!out) throw GraphError("cannot open " + cert_out + " for writing");
        write_edge_stream(out, out_stream);
      }
      return 0;
    }
    if (ver->parsed()) return cmd_verify(ver_graph, ver_sparsifier, ver_eps, ver_cuts, ver_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
