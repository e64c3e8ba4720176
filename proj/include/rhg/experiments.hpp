#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhg/certificates.hpp"
#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"
#include "rhg/solver.hpp"
#include "rhg/stats.hpp"

namespace rhg {

// Harness configuration shared by the sweep and the statistical suite. The
// grid entries are edge counts on the threshold scale: a ratio c stands for
// m = round(c * n * ln(n) / r) edges.
struct ExperimentConfig {
  std::uint32_t n = 21;
  std::uint32_t r = 3;
  std::vector<double> grid = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0};
  std::uint64_t trials = 100;
  Seed seed;
  std::uint64_t budget = 50'000'000;
  std::uint32_t threads = 1;
  double significance = 0.01;  // per-suite level before Bonferroni correction

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Throws std::invalid_argument when the grid is empty, trials == 0, r < 2 or
// n < r. Non-divisible n is allowed: the cycle solver reports those trials as
// not_found immediately, which is the honest outcome.
void validate(const ExperimentConfig& config);

// round(ratio * n * ln(n) / r), clamped to [0, C(n,r)].
std::uint64_t grid_edge_count(std::uint32_t n, std::uint32_t r, double ratio);

// One solver run. wall_seconds is measured for console reporting only; it is
// the single nondeterministic field, so it is excluded from comparisons and
// from every serialized artifact (identical config + seed must produce
// byte-identical files).
struct TrialRecord {
  Seed seed;  // the per-trial stream
  SearchStatus outcome = SearchStatus::not_found;
  std::uint64_t nodes = 0;
  bool isolated_vertex = false;  // the instance has a degree-0 vertex
  double wall_seconds = 0.0;

  friend bool operator==(const TrialRecord& a, const TrialRecord& b) {
    return a.seed == b.seed && a.outcome == b.outcome && a.nodes == b.nodes &&
           a.isolated_vertex == b.isolated_vertex;
  }
};

struct GridPointResult {
  double ratio = 0.0;
  std::uint64_t edges = 0;  // m at this grid point
  std::uint64_t found = 0;
  std::uint64_t not_found = 0;
  std::uint64_t budget_exceeded = 0;  // bounds the estimate, never corrupts it
  std::uint64_t isolated = 0;         // trials with an isolated vertex
  double rate = 0.0;                  // found / trials
  WilsonInterval confidence;          // Wilson interval at the config level
  std::vector<TrialRecord> records;   // one per trial, in trial order

  friend bool operator==(const GridPointResult&,
                         const GridPointResult&) = default;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<GridPointResult> points;  // in config.grid order

  friend bool operator==(const ExperimentResult&,
                         const ExperimentResult&) = default;
};

// Estimates P(loose Hamilton cycle) across the grid. Each trial draws one
// random permutation of all C(n,r) edges and reads the grid points as nested
// prefixes, so every point is marginally a uniform m-edge hypergraph while
// the points of one trial are monotone under inclusion; among the decided
// outcomes of a trial, existence must therefore be monotone in m (violations
// throw std::logic_error — the solver is exhaustive, so that would be a bug,
// not bad luck). Also records the isolated-vertex obstruction per trial.
// Trials run on config.threads workers writing to disjoint slots; the result
// does not depend on scheduling.
ExperimentResult threshold_sweep(const ExperimentConfig& config);

// Serialized forms. The CSV holds the per-trial records, the JSON the full
// summary; both embed the configuration. Parsing the JSON recovers the
// result exactly (wall times read back as 0 — see TrialRecord).
std::string sweep_csv(const ExperimentResult& result);
std::string result_json(const ExperimentResult& result);
ExperimentResult result_from_json(const std::string& text);

// --- matchings-to-cycle pipeline -----------------------------------------

struct PipelineStage {
  std::string name;  // "matching-1".."matching-<rho>", then "loose-cycle"
  SearchStatus status = SearchStatus::not_found;
  std::uint64_t nodes = 0;
};

// One end-to-end run: the layered coupling emits rho out-model hypergraphs,
// each is padded with an independent uniform m-edge layer, a perfect
// matching is searched per padded layer, and the loose-cycle solver runs on
// the union of the matchings found. Every stage is attempted and labeled
// even after an earlier failure, so a zero budget shows every solver stage
// as budget_exceeded.
struct PipelineReport {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  double eps = 0.0;
  Seed seed;
  std::uint64_t budget = 0;
  std::uint32_t rho = 0;          // matchings requested: floor(rho(r)) + 1
  std::uint32_t picks = 0;        // out-degree of each embedded layer
  std::uint64_t extra_edges = 0;  // padding per layer: round(eps*(n ln n/r)/rho)
  bool coupling_embedded = false;  // false when the layers were resampled
  std::string coupling_note;       // the embedding failure reason, if any
  std::vector<PipelineStage> stages;
  std::vector<std::vector<Edge>> matchings;  // validated, one per found stage
  std::vector<Edge> union_edges;  // sorted union of the matchings found
  // Certificate for Hypergraph(n, r, union_edges) when the last stage found
  // a cycle (edge indices refer to union_edges order).
  std::optional<LooseHamiltonCycle> cycle;
  std::string failed_stage;  // first stage without a find; empty when none
  bool success = false;      // every stage found
};

// Requires r >= 2, eps > 0 and r(r-1) | n (both the matchings and the cycle
// need their divisibility). Throws std::invalid_argument otherwise.
PipelineReport matching_pipeline(std::uint32_t n, std::uint32_t r, double eps,
                                 Seed seed, std::uint64_t budget = 50'000'000);

std::string pipeline_json(const PipelineReport& report);

// --- statistical suite ----------------------------------------------------

// One distributional claim checked by Monte Carlo. p_value is calibrated so
// that small values are evidence against the claim; pass compares it to the
// Bonferroni-corrected threshold (plus exact side conditions such as zero
// dominance violations, noted in `detail` when they exist).
struct ClaimResult {
  std::string name;  // stable identifier, unique within a report
  std::string description;
  std::uint64_t trials = 0;
  double statistic = 0.0;  // chi-square value or extreme |z|
  double p_value = 1.0;
  bool pass = false;
  std::string detail;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct SuiteReport {
  ExperimentConfig config;
  double threshold = 0.0;  // significance / number of claims
  std::vector<ClaimResult> claims;
  bool all_pass = false;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// Runs every distributional Monte-Carlo claim of the library exactly once
// with seeds derived from config.seed: sampler frequencies and conditional
// laws, the binomial dominance coupling, the layered-split marginal and
// independence identities, pick uniformity of the embedding, contraction
// acceptance and image-presence rates, and the codegree union bound. Claim
// sample sizes scale with config.trials (the expensive embedding claims are
// capped); config.trials == 0 returns an empty passing report.
SuiteReport statistical_suite(const ExperimentConfig& config);

std::string suite_json(const SuiteReport& report);
SuiteReport suite_from_json(const std::string& text);

}  // namespace rhg
