// Command-line front end: generators, solvers, the layered coupling, bound
// calculators, the contraction pipeline, threshold sweeps, and the
// statistical verification suite.
//
// Exit codes: 0 on success (including honest "not found" determinations),
// 2 when the verification suite fails, 3 when a search hit its node budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rhg/bounds.hpp"
#include "rhg/coupling.hpp"
#include "rhg/experiments.hpp"
#include "rhg/io.hpp"
#include "rhg/reduction.hpp"
#include "rhg/sampling.hpp"
#include "rhg/solver.hpp"
#include "rhg/util.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 2;
constexpr int kExitBudget = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string edge_text(const rhg::Edge& e) {
  std::ostringstream out;
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
  return out.str();
}

// Shortest representation that round-trips; std::to_string would pad zeros.
std::string num_text(double x) { return json(x).dump(); }

json cycle_json(const rhg::LooseHamiltonCycle& c) {
  return json{{"order", c.order}, {"edges", c.edges}};
}

struct GenOptions {
  std::string model;
  std::uint32_t n = 0, r = 0;
  std::uint64_t m = 0;
  double p = 0.0;
  std::uint32_t d = 0;
  std::uint32_t rho = 1;
  std::string out;
  bool has_m = false, has_p = false, has_d = false;
};

int run_gen(const GenOptions& opt, rhg::Seed seed) {
  rhg::ModelParams params;
  params.n = opt.n;
  params.r = opt.r;
  if (opt.has_m) params.m = opt.m;
  if (opt.has_p) params.p = opt.p;
  if (opt.has_d) params.d = opt.d;
  params.rho = opt.rho;
  if (opt.model == "hnm") {
    rhg::save_hypergraph(opt.out, rhg::sample_fixed_size(params, seed));
  } else if (opt.model == "hnp") {
    rhg::save_hypergraph(opt.out, rhg::sample_binomial(params, seed));
  } else if (opt.model == "oriented") {
    rhg::save_oriented(opt.out, rhg::sample_oriented_binomial(params, seed));
  } else if (opt.model == "dout") {
    rhg::save_oriented(opt.out, rhg::sample_out_model(params, seed));
  } else {  // matching-union
    rhg::save_hypergraph(opt.out, rhg::sample_matching_union(params, seed));
  }
  std::cout << "wrote " << opt.out << "\n";
  return kExitOk;
}

struct SolveOptions {
  std::string task;
  std::string in;
  std::uint64_t budget = 50'000'000;
  std::string out;
  std::uint64_t samples = 0;  // weights: 0 = exhaustive
};

int run_solve(const SolveOptions& opt, rhg::Seed seed, const std::string& format) {
  rhg::Hypergraph h = rhg::load_hypergraph(opt.in);
  json j{{"task", opt.task}, {"n", h.n()}, {"r", h.r()}, {"m", h.m()}};
  int exit_code = kExitOk;

  if (opt.task == "loose-ham") {
    rhg::CycleSearch s =
        rhg::find_loose_hamilton(h, rhg::CycleSearchOptions{opt.budget, 0, false});
    j["status"] = rhg::to_string(s.status);
    j["nodes"] = s.nodes;
    j["cycle"] = s.cycle ? cycle_json(*s.cycle) : json(nullptr);
    if (s.status == rhg::SearchStatus::budget_exceeded) exit_code = kExitBudget;
  } else if (opt.task == "pm") {
    rhg::MatchingSearch s = rhg::find_perfect_matching(h, opt.budget);
    j["status"] = rhg::to_string(s.status);
    j["nodes"] = s.nodes;
    j["matching"] = s.matching ? json(s.matching->edges) : json(nullptr);
    if (s.status == rhg::SearchStatus::budget_exceeded) exit_code = kExitBudget;
  } else if (opt.task == "count-pm") {
    j["count"] = rhg::count_matchings(h).str();
  } else {  // weights
    rhg::WeightProfile profile = rhg::matching_weight_profile(
        h, opt.samples == 0, opt.samples, seed);
    j["exhaustive"] = profile.exhaustive;
    j["mean"] = profile.mean;
    j["max_over_mean"] =
        profile.max_over_mean ? json(*profile.max_over_mean) : json(nullptr);
    json weights = json::array();
    for (const auto& [subset, count] : profile.weights)
      weights.push_back(json{{"subset", subset}, {"count", count.str()}});
    j["weights"] = std::move(weights);
  }

  const std::string text = j.dump(2) + "\n";
  if (!opt.out.empty()) write_file(opt.out, text);
  if (format == "json") {
    std::cout << text;
  } else {
    std::cout << "task: " << opt.task << "\n";
    if (j.contains("status"))
      std::cout << "status: " << j["status"].get<std::string>()
                << "  nodes: " << j["nodes"].get<std::uint64_t>() << "\n";
    if (j.contains("count"))
      std::cout << "perfect matchings: " << j["count"].get<std::string>()
                << "\n";
    if (j.contains("mean"))
      std::cout << "mean weight: " << j["mean"].get<double>() << "\n";
  }
  return exit_code;
}

struct CoupleOptions {
  std::uint32_t n = 0, r = 0;
  double eps = 0.0;
  std::uint32_t rho = 1;
  double eps_prime = 0.1;
  std::uint64_t trials = 1;
  std::string transcript_path;
};

int run_couple(const CoupleOptions& opt, rhg::Seed seed, const std::string& format) {
  rhg::CouplingParams params;
  params.n = opt.n;
  params.r = opt.r;
  params.eps = opt.eps;
  params.rho = opt.rho;
  params.eps_prime = opt.eps_prime;

  std::uint64_t successes = 0;
  std::uint64_t by_reason[4] = {0, 0, 0, 0};
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    // each run consumes two streams (split + relabeling)
    rhg::CouplingTranscript tr = rhg::run_coupling(
        params, seed.with_stream(seed.stream + 2 * t));
    if (t == 0 && !opt.transcript_path.empty())
      write_file(opt.transcript_path, rhg::transcript_json(tr));
    if (tr.success)
      ++successes;
    else
      ++by_reason[static_cast<int>(tr.failure)];
  }

  const rhg::SplitProbabilities prob = rhg::split_probabilities(params);
  json j{{"n", opt.n},
         {"r", opt.r},
         {"eps", opt.eps},
         {"rho", opt.rho},
         {"eps_prime", opt.eps_prime},
         {"trials", opt.trials},
         {"successes", successes},
         {"success_rate",
          static_cast<double>(successes) / static_cast<double>(opt.trials)},
         {"failures",
          json{{"weak_fraction", by_reason[1]},
               {"promoted_degree", by_reason[2]},
               {"label_overflow", by_reason[3]}}},
         {"min_out_degree", prob.min_out_degree}};
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rhg::describe(prob);
    std::cout << "trials: " << opt.trials << "  embedded: " << successes
              << "\n";
    std::cout << "failures: weak_fraction=" << by_reason[1]
              << " promoted_degree=" << by_reason[2]
              << " label_overflow=" << by_reason[3] << "\n";
    if (!opt.transcript_path.empty())
      std::cout << "transcript: " << opt.transcript_path << "\n";
  }
  return kExitOk;
}

struct BoundsOptions {
  std::string which;
  double n = 100, p = 0.5, eps = 0.2, alpha = 2.0;
  std::uint64_t m = 0;
  std::uint32_t r = 3, k = 1, root_r = 3;
  double tol = 1e-13;
  std::string form = "substituted";
};

int run_bounds(const BoundsOptions& opt, const std::string& format) {
  rhg::TailBoundReport report;
  report.which = opt.which;
  json extra;

  if (opt.which == "cher1") {
    const auto trials = static_cast<std::uint64_t>(opt.n);
    report.params = "n=" + std::to_string(trials) + " p=" + num_text(opt.p) +
                    " eps=" + num_text(opt.eps);
    report.exact = rhg::binomial_two_sided_tail(trials, opt.p, opt.eps);
    report.bound = rhg::chernoff_two_sided(opt.n, opt.p, opt.eps);
  } else if (opt.which == "cher2") {
    const auto trials = static_cast<std::uint64_t>(opt.n);
    report.params = "n=" + std::to_string(trials) + " p=" + num_text(opt.p) +
                    " alpha=" + num_text(opt.alpha);
    report.exact =
        rhg::binomial_upper_tail(trials, opt.p, opt.alpha * opt.n * opt.p);
    report.bound = rhg::chernoff_overshoot(opt.n, opt.p, opt.alpha);
  } else if (opt.which == "cov") {
    report.params = "n=" + std::to_string(static_cast<std::uint64_t>(opt.n)) +
                    " r=" + std::to_string(opt.r) + " m=" + std::to_string(opt.m) +
                    " k=" + std::to_string(opt.k);
    report.exact = 0.0L;  // no closed-form tail; see the simulation claim
    report.bound = rhg::codegree_union_bound(
        static_cast<std::uint32_t>(opt.n), opt.r, opt.m, opt.k);
  } else if (opt.which == "theta") {
    report.params =
        "eps=" + num_text(opt.eps) + " alpha=" + num_text(opt.alpha);
    report.exact = 0.0L;
    report.bound = rhg::low_degree_exponent(opt.eps, opt.alpha);
    extra["regime_ok"] = rhg::low_degree_exponent_ok(opt.eps, opt.alpha);
  } else {  // rho
    const rhg::ThresholdForm form = opt.form == "original"
                                        ? rhg::ThresholdForm::original
                                        : rhg::ThresholdForm::substituted;
    const rhg::DegreeThreshold th = rhg::degree_threshold(opt.root_r, opt.tol, form);
    report.params = "r=" + std::to_string(opt.root_r) + " tol=" + num_text(opt.tol);
    report.exact = th.residual;
    report.bound = th.value;
    extra["min_degree"] = th.min_degree;
  }
  report.slack = report.bound - static_cast<double>(report.exact);

  json j{{"which", report.which},
         {"params", report.params},
         {"exact", static_cast<double>(report.exact)},
         {"bound", report.bound},
         {"slack", report.slack}};
  for (auto& [key, val] : extra.items()) j[key] = val;

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "which:  " << report.which << "\n"
              << "params: " << report.params << "\n"
              << "exact:  " << static_cast<double>(report.exact) << "\n"
              << "bound:  " << report.bound << "\n"
              << "slack:  " << report.slack << "\n";
    for (auto& [key, val] : extra.items())
      std::cout << key << ": " << val.dump() << "\n";
  }
  return kExitOk;
}

struct ReduceOptions {
  std::string in;
  double p = 0.0;
  bool has_p = false;
  std::uint64_t budget = 50'000'000;
  std::string out;
};

int run_reduce(const ReduceOptions& opt, rhg::Seed seed, const std::string& format) {
  rhg::Hypergraph h = rhg::load_hypergraph(opt.in);
  std::optional<double> p;
  if (opt.has_p) p = opt.p;
  rhg::ReductionResult res = rhg::reduce_and_solve(h, p, seed, opt.budget);

  json j{{"status", rhg::to_string(res.status)},
         {"p1", res.split.p1},
         {"p2", res.split.p2},
         {"anchor", res.anchor},
         {"anchor_layer_edges", res.anchor_layer.size()},
         {"body_layer_edges", res.body_layer.size()}};
  j["inner_status"] =
      res.inner ? json(rhg::to_string(res.inner->status)) : json(nullptr);
  j["inner_nodes"] = res.inner ? json(res.inner->nodes) : json(nullptr);
  j["lift_failure"] =
      res.lift_failure ? json(rhg::to_string(*res.lift_failure)) : json(nullptr);
  j["cycle"] = res.cycle ? cycle_json(*res.cycle) : json(nullptr);

  const std::string text = j.dump(2) + "\n";
  if (!opt.out.empty()) write_file(opt.out, text);
  if (format == "json") {
    std::cout << text;
  } else {
    std::cout << "status: " << rhg::to_string(res.status) << "\n";
    if (!res.anchor.empty())
      std::cout << "anchor: " << edge_text(res.anchor) << "\n";
    if (res.cycle) {
      std::cout << "order:";
      for (rhg::Vertex v : res.cycle->order) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return res.status == rhg::ReductionStatus::inner_budget_exceeded ? kExitBudget
                                                                   : kExitOk;
}

struct SweepOptions {
  std::uint32_t n = 21, r = 3;
  std::vector<double> grid;
  std::uint64_t trials = 100;
  std::uint64_t budget = 50'000'000;
  std::string out;  // prefix: writes <out>.csv and <out>.json
};

int run_sweep(const SweepOptions& opt, rhg::Seed seed, std::uint32_t threads,
              const std::string& format) {
  rhg::ExperimentConfig config;
  config.n = opt.n;
  config.r = opt.r;
  if (!opt.grid.empty()) config.grid = opt.grid;
  config.trials = opt.trials;
  config.seed = seed;
  config.budget = opt.budget;
  config.threads = threads;

  rhg::ExperimentResult result = rhg::threshold_sweep(config);
  const std::string csv = rhg::sweep_csv(result);
  const std::string summary = rhg::result_json(result);
  if (!opt.out.empty()) {
    write_file(opt.out + ".csv", csv);
    write_file(opt.out + ".json", summary);
  }
  if (format == "csv") {
    std::cout << csv;
  } else {
    std::cout << summary;
  }
  std::cerr << "# point summary (ratio m found/trials rate [wilson] "
               "isolated budget_exceeded)\n";
  for (const rhg::GridPointResult& pt : result.points) {
    std::ostringstream line;
    line << "# " << pt.ratio << " " << pt.edges << " " << pt.found << "/"
         << config.trials << " " << pt.rate << " [" << pt.confidence.low
         << ", " << pt.confidence.high << "] " << pt.isolated << " "
         << pt.budget_exceeded;
    std::cerr << line.str() << "\n";
  }
  return kExitOk;
}

struct PipelineOptions {
  std::uint32_t n = 12, r = 3;
  double eps = 1.0;
  std::uint64_t budget = 50'000'000;
  std::string out;
};

int run_pipeline(const PipelineOptions& opt, rhg::Seed seed,
                 const std::string& format) {
  rhg::PipelineReport report =
      rhg::matching_pipeline(opt.n, opt.r, opt.eps, seed, opt.budget);
  const std::string text = rhg::pipeline_json(report);
  if (!opt.out.empty()) write_file(opt.out, text);
  if (format == "json") {
    std::cout << text;
  } else {
    std::cout << "rho: " << report.rho << "  picks: " << report.picks
              << "  extra edges/layer: " << report.extra_edges << "\n";
    std::cout << "coupling embedded: " << (report.coupling_embedded ? "yes" : "no");
    if (!report.coupling_note.empty())
      std::cout << " (" << report.coupling_note << ")";
    std::cout << "\n";
    for (const rhg::PipelineStage& s : report.stages)
      std::cout << s.name << ": " << rhg::to_string(s.status)
                << " (nodes " << s.nodes << ")\n";
    std::cout << (report.success ? "pipeline complete"
                                 : "failed at " + report.failed_stage)
              << "\n";
  }
  bool budget_hit = false;
  for (const rhg::PipelineStage& s : report.stages)
    budget_hit = budget_hit || s.status == rhg::SearchStatus::budget_exceeded;
  return budget_hit ? kExitBudget : kExitOk;
}

struct VerifyOptions {
  std::uint64_t trials = 100'000;
  double significance = 0.01;
  std::string out;
};

int run_verify(const VerifyOptions& opt, rhg::Seed seed, std::uint32_t threads,
               const std::string& format) {
  rhg::ExperimentConfig config;
  config.trials = opt.trials;
  config.seed = seed;
  config.threads = threads;
  config.significance = opt.significance;

  rhg::SuiteReport report = rhg::statistical_suite(config);
  const std::string text = rhg::suite_json(report);
  if (!opt.out.empty()) write_file(opt.out, text);
  if (format == "json") {
    std::cout << text;
  } else {
    for (const rhg::ClaimResult& c : report.claims) {
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                << "  p=" << c.p_value << "  stat=" << c.statistic;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << "claims: " << report.claims.size()
              << "  threshold: " << report.threshold
              << (report.all_pass ? "  all pass" : "  FAILURES PRESENT")
              << "\n";
  }
  return report.all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random r-uniform hypergraph laboratory"};
  app.require_subcommand(1);

  std::uint64_t seed_value = 0;
  std::uint64_t seed_stream = 0;
  std::uint32_t threads = 1;
  std::string format = "json";
  app.add_option("--seed", seed_value, "base RNG seed")->capture_default_str();
  app.add_option("--stream", seed_stream, "base RNG stream index")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for trial loops")
      ->capture_default_str();
  app.add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "sample a random hypergraph");
  gen_cmd->add_option("--model", gen.model, "random model")
      ->required()
      ->check(CLI::IsMember({"hnm", "hnp", "oriented", "dout", "matching-union"}));
  gen_cmd->add_option("--n", gen.n, "vertices")->required();
  gen_cmd->add_option("--r", gen.r, "edge size")->required();
  CLI::Option* gen_m = gen_cmd->add_option("--m", gen.m, "edge count (hnm)");
  CLI::Option* gen_p = gen_cmd->add_option("--p", gen.p, "edge probability");
  CLI::Option* gen_d = gen_cmd->add_option("--d", gen.d, "picks per vertex (dout)");
  gen_cmd->add_option("--rho", gen.rho, "matchings to union");
  gen_cmd->add_option("--out", gen.out, "output file")->required();

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run an exact search");
  solve_cmd->add_option("--task", solve.task, "search task")
      ->required()
      ->check(CLI::IsMember({"loose-ham", "pm", "count-pm", "weights"}));
  solve_cmd->add_option("--in", solve.in, "input hypergraph file")->required();
  solve_cmd->add_option("--budget", solve.budget, "search-node budget")
      ->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "result file (JSON)");
  solve_cmd->add_option("--samples", solve.samples,
                        "weights: sampled subset count (0 = exhaustive)");

  CoupleOptions couple;
  CLI::App* couple_cmd =
      app.add_subcommand("couple", "run the layered out-model embedding");
  couple_cmd->add_option("--n", couple.n, "vertices")->required();
  couple_cmd->add_option("--r", couple.r, "edge size")->required();
  couple_cmd->add_option("--eps", couple.eps, "density surplus")->required();
  couple_cmd->add_option("--rho", couple.rho, "layers")->capture_default_str();
  couple_cmd->add_option("--eps-prime", couple.eps_prime, "bad-fraction exponent")
      ->capture_default_str();
  couple_cmd->add_option("--trials", couple.trials, "repetitions")
      ->capture_default_str();
  couple_cmd->add_option("--dump-transcript", couple.transcript_path,
                         "write the first run's transcript JSON here");

  BoundsOptions bounds;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "evaluate a probability bound");
  bounds_cmd->add_option("--which", bounds.which, "bound selector")
      ->required()
      ->check(CLI::IsMember({"cher1", "cher2", "cov", "theta", "rho"}));
  bounds_cmd->add_option("--n", bounds.n, "trial count");
  bounds_cmd->add_option("--p", bounds.p, "success probability");
  bounds_cmd->add_option("--eps", bounds.eps, "relative deviation");
  bounds_cmd->add_option("--alpha", bounds.alpha, "overshoot factor");
  bounds_cmd->add_option("--m", bounds.m, "edge count (cov)");
  bounds_cmd->add_option("--r", bounds.r, "edge size (cov)");
  bounds_cmd->add_option("--k", bounds.k, "codegree threshold (cov)");
  bounds_cmd->add_option("--root-r", bounds.root_r, "edge size (rho)");
  bounds_cmd->add_option("--tol", bounds.tol, "root tolerance (rho)");
  bounds_cmd->add_option("--equation-form", bounds.form,
                         "rho equation form")
      ->check(CLI::IsMember({"substituted", "original"}));

  ReduceOptions reduce;
  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "contract an anchor edge, solve, and lift the cycle back");
  reduce_cmd->add_option("--in", reduce.in, "input hypergraph file")->required();
  CLI::Option* reduce_p =
      reduce_cmd->add_option("--p", reduce.p, "layer density (default m/C(n,r))");
  reduce_cmd->add_option("--budget", reduce.budget, "search-node budget")
      ->capture_default_str();
  reduce_cmd->add_option("--out", reduce.out, "result file (JSON)");

  SweepOptions sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "estimate the loose-cycle threshold curve");
  sweep_cmd->add_option("--n", sweep.n, "vertices")->capture_default_str();
  sweep_cmd->add_option("--r", sweep.r, "edge size")->capture_default_str();
  sweep_cmd->add_option("--grid", sweep.grid,
                        "ratios m / (n ln n / r), space or comma separated")
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials, "trials per grid point")
      ->capture_default_str();
  sweep_cmd->add_option("--budget", sweep.budget, "search-node budget")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out,
                        "output prefix (writes <prefix>.csv and <prefix>.json)");

  PipelineOptions pipeline;
  CLI::App* pipeline_cmd = app.add_subcommand(
      "pipeline", "coupling -> matchings -> union -> loose cycle");
  pipeline_cmd->add_option("--n", pipeline.n, "vertices")->capture_default_str();
  pipeline_cmd->add_option("--r", pipeline.r, "edge size")->capture_default_str();
  pipeline_cmd->add_option("--eps", pipeline.eps, "density surplus")
      ->capture_default_str();
  pipeline_cmd->add_option("--budget", pipeline.budget, "search-node budget")
      ->capture_default_str();
  pipeline_cmd->add_option("--out", pipeline.out, "report file (JSON)");

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every distributional claim");
  verify_cmd->add_option("--trials", verify.trials, "base sample size")
      ->capture_default_str();
  verify_cmd->add_option("--significance", verify.significance,
                         "suite significance level")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "report file (JSON)");

  // Let the global options (--seed, --format, ...) appear after the
  // subcommand name as well as before it.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  gen.has_m = gen_m->count() > 0;
  gen.has_p = gen_p->count() > 0;
  gen.has_d = gen_d->count() > 0;
  reduce.has_p = reduce_p->count() > 0;
  const rhg::Seed seed{seed_value, seed_stream};

  try {
    if (*gen_cmd) return run_gen(gen, seed);
    if (*solve_cmd) return run_solve(solve, seed, format);
    if (*couple_cmd) return run_couple(couple, seed, format);
    if (*bounds_cmd) return run_bounds(bounds, format);
    if (*reduce_cmd) return run_reduce(reduce, seed, format);
    if (*sweep_cmd) return run_sweep(sweep, seed, threads, format);
    if (*pipeline_cmd) return run_pipeline(pipeline, seed, format);
    if (*verify_cmd) return run_verify(verify, seed, threads, format);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return kExitOk;
}
