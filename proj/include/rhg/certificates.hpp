#pragma once

#include "rhg/hypergraph.hpp"

namespace rhg {

// Loose Hamilton cycle: a cyclic order of all n vertices together with the
// n/(r-1) host edge indices realizing it. Edge i must equal (as a set) the
// block of r consecutive vertices starting at position i*(r-1) of the order,
// so consecutive edges share exactly one vertex (their junction) and every
// vertex is covered.
struct LooseHamiltonCycle {
  std::vector<Vertex> order;       // cyclic vertex order, length n
  std::vector<EdgeIndex> edges;    // host edge index per block, length n/(r-1)
};

// Perfect matching: n/r pairwise disjoint host edges covering every vertex.
struct PerfectMatching {
  std::vector<EdgeIndex> edges;
};

enum class CycleError {
  none,
  divisibility,     // (r-1) does not divide n, or fewer than 3 blocks
  length,           // order or edge list has the wrong length
  not_permutation,  // order is not a permutation of {0,..,n-1}
  edge_index,       // an edge index is out of range
  block_mismatch,   // a block of the order is not the claimed host edge
  bad_overlap       // consecutive edges do not share exactly one vertex
};

enum class MatchingError {
  none,
  divisibility,  // r does not divide n
  length,        // wrong number of edges
  edge_index,    // an edge index is out of range
  overlap,       // a vertex covered more than once
  coverage       // a vertex left uncovered
};

const char* to_string(CycleError e);
const char* to_string(MatchingError e);

CycleError validate_loose_cycle(const Hypergraph& h,
                                const LooseHamiltonCycle& c);
MatchingError validate_perfect_matching(const Hypergraph& h,
                                        const PerfectMatching& m);

}  // namespace rhg
