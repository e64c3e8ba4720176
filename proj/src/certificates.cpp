#include "rhg/certificates.hpp"

#include <algorithm>

namespace rhg {

const char* to_string(CycleError e) {
  switch (e) {
    case CycleError::none: return "none";
    case CycleError::divisibility: return "divisibility";
    case CycleError::length: return "length";
    case CycleError::not_permutation: return "not_permutation";
    case CycleError::edge_index: return "edge_index";
    case CycleError::block_mismatch: return "block_mismatch";
    case CycleError::bad_overlap: return "bad_overlap";
  }
  return "?";
}

const char* to_string(MatchingError e) {
  switch (e) {
    case MatchingError::none: return "none";
    case MatchingError::divisibility: return "divisibility";
    case MatchingError::length: return "length";
    case MatchingError::edge_index: return "edge_index";
    case MatchingError::overlap: return "overlap";
    case MatchingError::coverage: return "coverage";
  }
  return "?";
}

CycleError validate_loose_cycle(const Hypergraph& h,
                                const LooseHamiltonCycle& c) {
  const std::uint32_t n = h.n();
  const std::uint32_t r = h.r();
  const std::uint32_t step = r - 1;
  if (n == 0 || n % step != 0) return CycleError::divisibility;
  const std::uint32_t q = n / step;
  if (q < 3) return CycleError::divisibility;
  if (c.order.size() != n || c.edges.size() != q) return CycleError::length;

  std::vector<bool> seen(n, false);
  for (Vertex v : c.order) {
    if (v >= n || seen[v]) return CycleError::not_permutation;
    seen[v] = true;
  }
  for (EdgeIndex i : c.edges)
    if (i >= h.m()) return CycleError::edge_index;

  for (std::uint32_t b = 0; b < q; ++b) {
    Edge block(r);
    for (std::uint32_t j = 0; j < r; ++j)
      block[j] = c.order[(static_cast<std::uint64_t>(b) * step + j) % n];
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      return CycleError::block_mismatch;
    if (block != h.edge(c.edges[b])) return CycleError::block_mismatch;
  }
  for (std::uint32_t b = 0; b < q; ++b) {
    const Edge& a = h.edge(c.edges[b]);
    const Edge& d = h.edge(c.edges[(b + 1) % q]);
    Edge inter;
    std::set_intersection(a.begin(), a.end(), d.begin(), d.end(),
                          std::back_inserter(inter));
    if (inter.size() != 1) return CycleError::bad_overlap;
  }
  return CycleError::none;
}

MatchingError validate_perfect_matching(const Hypergraph& h,
                                        const PerfectMatching& m) {
  const std::uint32_t n = h.n();
  const std::uint32_t r = h.r();
  if (n % r != 0) return MatchingError::divisibility;
  if (m.edges.size() != n / r) return MatchingError::length;
  std::vector<bool> covered(n, false);
  for (EdgeIndex i : m.edges) {
    if (i >= h.m()) return MatchingError::edge_index;
    for (Vertex v : h.edge(i)) {
      if (covered[v]) return MatchingError::overlap;
      covered[v] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) return MatchingError::coverage;
  return MatchingError::none;
}

}  // namespace rhg
