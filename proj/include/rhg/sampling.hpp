#pragma once

#include <optional>

#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"

namespace rhg {

// Parameter record shared by the random models. Each sampler validates that
// the fields it needs are present and in range, and throws
// std::invalid_argument otherwise.
struct ModelParams {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::optional<std::uint64_t> m;    // fixed edge count
  std::optional<double> p;           // per-edge probability
  std::optional<std::uint32_t> d;    // picks per vertex (out model)
  std::optional<std::uint32_t> rho;  // number of matchings to union
};

// Uniform m-subset of all C(n,r) edges (simple). Edges emitted in ascending
// colex rank order.
Hypergraph sample_fixed_size(const ModelParams& params, Seed seed);

// Each edge independently with probability p (simple).
Hypergraph sample_binomial(const ModelParams& params, Seed seed);
Hypergraph sample_binomial(const ModelParams& params, Rng& rng);

// Each of the r*C(n,r) oriented edges independently with probability p.
// Orientations of one vertex set are distinct edges; the unoriented
// projection therefore follows sample_binomial with 1-(1-p)^r.
OrientedHypergraph sample_oriented_binomial(const ModelParams& params,
                                            Seed seed);
OrientedHypergraph sample_oriented_binomial(const ModelParams& params,
                                            Rng& rng);

// Out model: every vertex independently picks d of its C(n-1,r-1) incident
// head sets uniformly *with replacement* and is the tail of each pick.
// Repeats are kept, so the result is a multigraph with exactly n*d edges.
OrientedHypergraph sample_out_model(const ModelParams& params, Seed seed);
OrientedHypergraph sample_out_model(const ModelParams& params, Rng& rng);

// Uniform perfect matching of the complete r-uniform hypergraph, built by
// repeatedly matching the lowest unmatched vertex with a uniform (r-1)-subset
// of the others. Requires r | n.
std::vector<Edge> sample_uniform_matching(std::uint32_t n, std::uint32_t r,
                                          Rng& rng);

// Union (as an edge multiset) of rho independent uniform perfect matchings.
Hypergraph sample_matching_union(const ModelParams& params, Seed seed);

// Deletion process: a uniform random permutation e_1..e_N of all edges of the
// complete r-uniform hypergraph is fixed up front together with a protected
// edge set which is never removed. After t steps the hypergraph holds the
// protected edges plus {e_{t+1},..,e_N}; step t deletes e_t unless protected.
// The caller advances the process and decides when to stop.
class EdgeRemovalProcess {
 public:
  EdgeRemovalProcess(std::uint32_t n, std::uint32_t r,
                     const std::vector<Edge>& protected_edges, Seed seed);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t total_edges() const { return order_.size(); }  // N = C(n,r)
  std::uint64_t step() const { return t_; }
  bool done() const { return t_ == order_.size(); }
  std::uint64_t edge_count() const { return m_; }  // |protected u remainder|

  // Performs step t+1. Returns true if the step removed an edge (i.e. e_t was
  // not protected and the edge count dropped by one).
  bool advance();

  const Edge& last_edge() const { return last_edge_; }
  bool last_protected() const { return last_protected_; }

  // Materializes the current hypergraph; edges in ascending rank order.
  Hypergraph current() const;

 private:
  std::uint32_t n_, r_;
  std::vector<std::uint64_t> order_;   // removal order of ranks
  std::vector<bool> present_;          // by rank
  std::vector<bool> protected_;        // by rank
  std::uint64_t t_ = 0;
  std::uint64_t m_ = 0;
  Edge last_edge_;
  bool last_protected_ = false;
};

}  // namespace rhg
