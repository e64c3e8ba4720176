#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"
#include "rhg/stats.hpp"

namespace rhg {

// Parameters of the layered embedding: a single binomial hypergraph at
// density p = (1+eps) * ln(n) / C(n-1, r-1) is split so that rho independent
// out-model hypergraphs with min_out_degree picks per vertex can be read off
// from inside it.
struct CouplingParams {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  double eps = 0.0;             // density surplus over the threshold
  std::uint32_t rho = 1;        // number of embedded out-model layers
  double eps_prime = 0.1;       // exponent in the bad-fraction bound n^-eps'
};

// All derived densities. The defining relations:
//   p_star     = ln(n) / C(n-1, r-1)
//   p          = (1 + eps) * p_star
//   p1         = 1 - (1 - (eps/2) p_star)^(1/r)     (type-1 oriented density)
//   p1_layer   : (1 - p1_layer)^rho = 1 - p1        (per-layer density)
//   p2         = (1 + eps/2) * p_star               (type-2 unoriented)
//   p3         : (1 - p3)^r = 1 - p2                (type-3 oriented)
//   p1_shadow  = (eps/2) p_star = 1 - (1 - p1)^r    (unoriented type-1)
//   p3_shadow  = p2                                 (unoriented type-3)
// so p1_shadow + p2 = p exactly.
struct SplitProbabilities {
  double p_star = 0.0;
  double p = 0.0;
  double p1 = 0.0;
  double p1_layer = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double p1_shadow = 0.0;
  double p3_shadow = 0.0;
  std::uint32_t min_out_degree = 0;  // ceil(eps^2 * ln n), picks per layer
};

// Computes the table above; throws std::domain_error when any derived
// probability leaves [0,1] (n too small for the given eps).
SplitProbabilities split_probabilities(const CouplingParams& params);

// Human-readable dump of the probability table with its defining formulas.
std::string describe(const SplitProbabilities& prob);

// The three independent source hypergraphs.
struct EdgeTypeSplit {
  CouplingParams params;
  SplitProbabilities prob;
  std::vector<OrientedHypergraph> type1_layers;  // rho x oriented(p1_layer)
  Hypergraph type2;                              // unoriented(p2)
  OrientedHypergraph type3;                      // oriented(p3)

  EdgeTypeSplit() : type2(0, 2, {}), type3(0, 2, {}) {}
};

EdgeTypeSplit build_split(const CouplingParams& params, Seed seed);

// Vertex classes: a vertex is strong when its out-degree reaches
// min_out_degree in every type-1 layer, weak otherwise.
struct VertexClassification {
  std::vector<std::vector<std::uint32_t>> out_degree;  // [layer][vertex]
  std::vector<Vertex> strong;                          // ascending
  std::vector<Vertex> weak;                            // ascending
  double weak_fraction = 0.0;
  double weak_fraction_bound = 0.0;  // n^-eps'
  bool within_bound = false;         // weak_fraction <= bound
};

VertexClassification classify_vertices(const EdgeTypeSplit& split);

// Reasons the embedding can fail. Evaluated in this order; the first
// violation is recorded.
enum class CouplingFailure {
  none,
  weak_fraction,          // too many weak vertices
  promoted_degree,        // some weak vertex has < rho*d picks available
  label_overflow,         // more label draws hit the scarce zone than edges
};

std::string to_string(CouplingFailure failure);

// Per-weak-vertex record of the label-relabeling stage.
struct WeakVertexRecord {
  Vertex v = 0;
  std::uint64_t x = 0;  // candidate out-edges whose heads are all strong
  std::uint64_t y = 0;  // remaining candidates (some other weak vertex)
  std::vector<OrientedEdge> s_edges;   // realized promoted out-edges (in X)
  std::vector<OrientedEdge> s_prime;   // uniform rho*d-subset of s_edges
  std::vector<OrientedEdge> t_edges;   // realized scarce out-edges (in Y)
  std::vector<std::uint64_t> labels;   // rho*d uniform draws from [0, x+y)
  std::uint32_t scarce_draws = 0;      // draws with label < y
  bool ok = false;                     // scarce_draws <= |t_edges|
};

// Full record of one embedding run.
struct CouplingTranscript {
  EdgeTypeSplit split;
  VertexClassification classification;
  // Promoted type-2 edges (at most one weak vertex; the weak vertex, or the
  // smallest vertex when none, becomes the tail) and retained type-3 edges
  // (more than one weak vertex, original orientation).
  std::vector<OrientedEdge> promoted;
  std::vector<OrientedEdge> retained;
  std::vector<WeakVertexRecord> weak_records;
  CouplingFailure failure = CouplingFailure::none;
  std::optional<Vertex> failure_vertex;  // first offending vertex, if any
  bool success = false;
  // The extracted layers: out-model hypergraphs with min_out_degree picks
  // per vertex. Edges are grouped by tail in ascending order with the pick
  // slots of one tail kept in draw order. On failure these are resampled
  // fresh, independently of everything above.
  std::vector<OrientedHypergraph> layers;
};

// Runs the relabeling stage on a finished split + classification and
// extracts the layers (or fresh replacements on failure).
CouplingTranscript extract_layers(const EdgeTypeSplit& split,
                                  const VertexClassification& classification,
                                  Rng& rng);
CouplingTranscript extract_layers(const EdgeTypeSplit& split,
                                  const VertexClassification& classification,
                                  Seed seed);

// build_split + classify_vertices + extract_layers on one stream.
CouplingTranscript run_coupling(const CouplingParams& params, Seed seed);

// JSON rendering of a transcript (densities, classes, labels, layers).
std::string transcript_json(const CouplingTranscript& transcript);

// One sample of the dominance pair: X from Bin(N, P), Y from Bin(L*K*N, P/K),
// constructed on one probability space so that X <= Y always. Requires
// 0 <= P <= 1/2 and L >= 2 (throws std::invalid_argument otherwise).
struct BinomialCouple {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};

BinomialCouple couple_binomials(std::uint64_t n_blocks, double p,
                                std::uint64_t k, std::uint64_t l, Rng& rng);

// Report of repeated couple_binomials runs at the parameter point implied by
// (n, r, eps, eps_prime, rho):
//   N = rho * eps^2 * ln n      (rounded, >= 1)
//   P = n^-eps_prime
//   K = (r / (1 + eps/2)) * C(n-1, r-1) / (n^eps_prime * ln n)  (rounded, >=1)
//   L = (1 + eps/2) / (eps^2 * r * rho)                         (rounded)
// in_regime is false when the rounded L is < 2 or P > 1/2; no trials are run
// in that case.
struct DominanceReport {
  std::uint64_t n_blocks = 0;  // N
  double p = 0.0;              // P
  std::uint64_t k = 0;         // K
  std::uint64_t l = 0;         // L
  bool in_regime = false;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;  // samples with X > Y (must stay 0)
  double mean_x = 0.0, mean_y = 0.0;
  double expected_x = 0.0, expected_y = 0.0;  // N*P and L*N*P
  ChiSquare fit_x, fit_y;  // marginal fit against the exact binomial pmf
};

DominanceReport verify_binomial_dominance(std::uint32_t n, std::uint32_t r,
                                          double eps, double eps_prime,
                                          std::uint32_t rho,
                                          std::uint64_t trials, Seed seed);

// Builds the marginal-fit chi-square used by the report: observed counts of
// values 0..max_observed plus one overflow cell, expected from the exact
// Bin(trials_per_sample, p) pmf. Exposed for reuse by the test harnesses.
ChiSquare binomial_fit(const std::vector<std::uint64_t>& values,
                       std::uint64_t n_trials, double p);

// Monte-Carlo check that the union of promoted and retained edges (as
// unoriented sets) behaves like an independent binomial hypergraph at
// density p2: per-edge frequencies, plus a covariance test between the
// indicator of a fixed edge in the type-1 union and in promoted+retained.
struct MarginalReport {
  std::uint64_t trials = 0;
  double p2 = 0.0;
  double sigma = 0.0;                  // sqrt(p2 (1-p2) / trials)
  std::vector<double> edge_frequency;  // by unoriented edge rank
  double max_abs_z = 0.0;              // max |freq - p2| / sigma
  bool frequencies_ok = false;         // max_abs_z <= 3
  double covariance = 0.0;             // cov(type-1 indicator, union indicator)
  double covariance_z = 0.0;           // cov / sqrt(var1 * var2 / trials)
  bool independence_ok = false;        // |covariance_z| <= 3
};

MarginalReport marginal_identity_check(std::uint32_t n, std::uint32_t r,
                                       double eps, std::uint64_t trials,
                                       Seed seed);

}  // namespace rhg
