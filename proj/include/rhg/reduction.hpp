#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rhg/certificates.hpp"
#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"
#include "rhg/solver.hpp"

namespace rhg {

// Density split used to carve an anchor layer out of one binomial hypergraph:
// p1 = ln(n) / total_edges and p2 defined by (1-p) = (1-p1)(1-p2), so a
// p-density hypergraph decomposes as the union of independent p1- and
// p2-density ones.
struct ProbabilitySplit {
  double p1 = 0.0;
  double p2 = 0.0;
};

// Throws std::domain_error when p < p1 (the split needs p1 <= p < 1).
ProbabilitySplit split_probability(double p, std::uint32_t n,
                                   std::uint64_t total_edges);

// One candidate edge meeting the contracted edge in exactly one vertex.
struct CandidateDecision {
  EdgeIndex source = 0;   // edge index in the input hypergraph
  Vertex dropped = 0;     // the single shared vertex, replaced by the merger
  bool accepted = false;  // kept with probability q = (1-(1-p2)^(1/r)) / p2
  Edge image;             // contracted-space edge (set when accepted)
};

// Relabeling data of one contraction step. Vertices outside the contracted
// edge keep their relative order and occupy ids 0..n-r-1; the merged vertex
// takes the final id n-r.
struct ContractionMap {
  Edge contracted_edge;            // the r original vertices merged away
  Vertex merged = 0;               // contracted-space id of the merger
  std::vector<Vertex> old_of_new;  // new id -> original id (merged -> kNoVertex)
  std::vector<Vertex> new_of_old;  // original id -> new id (edge members -> merged)
  std::vector<CandidateDecision> decisions;  // every one-overlap candidate
};

struct Contraction {
  Hypergraph graph;  // simple: duplicate images are deduplicated
  ContractionMap map;
};

// Contracts `edge` to a single new vertex: edges disjoint from it are kept
// (relabeled), edges meeting it in exactly one vertex are redirected to the
// merger and kept independently with probability q(p2, r), edges meeting it
// in two or more vertices are dropped. p2 is the density of the input layer;
// it only enters through q.
Contraction contract(const Hypergraph& h2, const Edge& edge, double p2,
                     Rng& rng);
Contraction contract(const Hypergraph& h2, const Edge& edge, double p2,
                     Seed seed);

// Acceptance ratio q = (1 - (1-p2)^(1/r)) / p2 (tends to 1/r as p2 -> 0).
double acceptance_ratio(double p2, std::uint32_t r);

enum class LiftFailure {
  merged_interior,    // the merged vertex is not a junction of the cycle
  preimage_conflict,  // every preimage pair drops the same original vertex
};

const char* to_string(LiftFailure f);

// Result of lifting: on success, the vertex order of a loose Hamilton cycle
// on the original n vertices (bind_cycle turns it into an index-certified
// cycle for a host hypergraph).
struct LiftOutcome {
  std::optional<std::vector<Vertex>> order;
  std::optional<LiftFailure> failure;
};

// Reverses one contraction on a cycle of the contracted instance: if the
// merged vertex is the junction of two consecutive cycle edges whose
// preimages drop two distinct vertices of the contracted edge, those two
// preimages plus the contracted edge replace the two cycle edges. All
// accepted preimage pairs are tried. Throws std::invalid_argument when the
// cycle or map is inconsistent (wrong host, unknown image edge).
LiftOutcome lift_cycle(const LooseHamiltonCycle& inner,
                       const ContractionMap& map, const Hypergraph& h2,
                       const Edge& edge);

// Binds a vertex order to host edge indices, block by block; std::nullopt
// when some block is not a host edge.
std::optional<LooseHamiltonCycle> bind_cycle(const Hypergraph& host,
                                             const std::vector<Vertex>& order);

enum class ReductionStatus {
  lifted,                 // success: cycle holds a validated certificate
  no_anchor,              // the anchor layer came out empty
  inner_not_found,        // the contracted instance has no loose Hamilton cycle
  inner_budget_exceeded,  // the inner search was cut off
  not_liftable,           // inner cycles exist but none lifted
};

const char* to_string(ReductionStatus s);

struct ReductionResult {
  ReductionStatus status = ReductionStatus::no_anchor;
  ProbabilitySplit split;
  std::vector<EdgeIndex> anchor_layer;  // input edges assigned to density p1
  std::vector<EdgeIndex> body_layer;    // input edges assigned to density p2
  Edge anchor;                          // chosen anchor edge (empty if none)
  std::optional<CycleSearch> inner;     // search result on the contracted graph
  std::optional<LiftFailure> lift_failure;
  std::optional<LooseHamiltonCycle> cycle;  // indices into the input hypergraph
};

// Full pipeline on a hypergraph drawn at density p (defaults to m / C(n,r)):
// thin the edges into the p1/p2 layers, anchor at the lowest canonical
// p1-edge, contract, search the contracted instance with the merged vertex
// pinned to a junction (falling back to an unconstrained search to tell
// "no cycle" from "no liftable cycle"), and lift. Requires (r-1) | n.
ReductionResult reduce_and_solve(const Hypergraph& h, std::optional<double> p,
                                 Seed seed, std::uint64_t budget = 50'000'000);

}  // namespace rhg
