#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "rhg/certificates.hpp"
#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"
#include "rhg/sampling.hpp"

namespace rhg {

using BigInt = boost::multiprecision::cpp_int;

enum class SearchStatus { found, not_found, budget_exceeded };
const char* to_string(SearchStatus s);

struct CycleSearchOptions {
  std::uint64_t budget = 50'000'000;  // search nodes (recursive calls)
  Vertex anchor = 0;                  // the first edge must contain this vertex
  bool anchor_as_junction = false;    // only cycles with the anchor at a junction
};

struct CycleSearch {
  SearchStatus status = SearchStatus::not_found;
  std::optional<LooseHamiltonCycle> cycle;
  std::uint64_t nodes = 0;
};

// Exhaustive backtracking over anchored edge chains. Sound (returned cycles
// validate) and complete within budget: not_found means no loose Hamilton
// cycle exists (restricted to anchor-at-junction cycles when that flag is
// set), budget_exceeded means the search was cut off and says nothing.
// Branching is deterministic: candidate edges in canonical edge order,
// junction choices in ascending vertex order.
CycleSearch find_loose_hamilton(const Hypergraph& h,
                                const CycleSearchOptions& opts = {});

struct MatchingSearch {
  SearchStatus status = SearchStatus::not_found;
  std::optional<PerfectMatching> matching;
  std::uint64_t nodes = 0;
};

// Exact-cover style backtracking: always branch on the lowest uncovered
// vertex, candidate edges in canonical order.
MatchingSearch find_perfect_matching(const Hypergraph& h,
                                     std::uint64_t budget = 50'000'000);

// Exact number of perfect matchings, as sets of edge indices (so parallel
// edges contribute multiplicatively). Exponential time, exact arithmetic;
// memoized on the uncovered vertex set when n <= 64.
BigInt count_matchings(const Hypergraph& h);

// Same count with a vertex subset removed up front: matchings must cover
// exactly the remaining vertices. Equivalent to counting in
// remove_vertices(h, removed).graph without relabeling.
BigInt count_matchings_outside(const Hypergraph& h,
                               const std::vector<Vertex>& removed);

// Matching counts of h with every r-subset S removed (the weight profile
// w(S)). Exhaustive mode walks all C(n,r) subsets in colex order; otherwise
// `samples` subsets are drawn uniformly without replacement.
struct WeightProfile {
  bool exhaustive = true;
  std::vector<std::pair<Edge, BigInt>> weights;
  double mean = 0.0;
  std::optional<double> max_over_mean;  // empty when mean == 0
};

WeightProfile matching_weight_profile(const Hypergraph& h, bool exhaustive,
                                      std::uint64_t samples = 0,
                                      Seed seed = {});

// Per-step observables of an edge-removal process run.
struct ProcessPoint {
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  bool step_protected = false;  // step t hit a protected edge (t >= 1)
  double edge_density = 0.0;    // r*m/n
  std::uint64_t max_degree = 0;
  std::uint64_t min_degree = 0;
  std::uint64_t max_codegree = 0;
  double scaling = 0.0;  // n/(r*m)
  // shrink ratio xi_t = 1 - Phi(H_t)/Phi(H_{t-1}); 0 when the step was
  // protected; absent at t = 0, when counting is off, or when Phi(H_{t-1})=0.
  std::optional<double> shrink_ratio;
  std::optional<double> log_matchings;  // ln Phi(H_t), absent when Phi = 0
  std::optional<BigInt> matchings;
};

struct DiagnosticsOptions {
  bool with_matching_counts = false;
  std::uint64_t max_steps = UINT64_MAX;
  bool stop_when_count_zero = false;
};

// Emits one row for the initial state and one per advance. The telescoping
// identity sum_i ln(1-xi_i) = ln Phi(H_t) - ln Phi(H_0) holds over rows with
// positive counts.
std::vector<ProcessPoint> run_diagnostics(EdgeRemovalProcess& process,
                                          const DiagnosticsOptions& opts = {});

}  // namespace rhg
