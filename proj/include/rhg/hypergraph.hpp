#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace rhg {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;  // sorted ascending, r distinct vertices
using EdgeIndex = std::size_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// r-uniform hypergraph on vertices {0,..,n-1}. Edges are stored in insertion
// order as a multiset; each edge is canonicalized (sorted) on construction.
// Constructing with require_simple = true rejects repeated edges.
class Hypergraph {
 public:
  Hypergraph(std::uint32_t n, std::uint32_t r, std::vector<Edge> edges,
             bool require_simple = false);

  static Hypergraph complete(std::uint32_t n, std::uint32_t r);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_[i]; }

  // Edge indices incident to v, sorted by canonical edge order (lexicographic
  // on the sorted vertex list, ties by index).
  const std::vector<EdgeIndex>& incident(Vertex v) const {
    return incident_[v];
  }

  std::uint64_t degree(Vertex v) const { return incident_[v].size(); }
  std::uint64_t codegree(Vertex v, Vertex w) const;
  std::uint64_t max_degree() const;
  std::uint64_t min_degree() const;
  std::uint64_t max_codegree() const;

  bool is_simple() const;
  bool has_edge(const Edge& sorted_edge) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  std::uint32_t n_;
  std::uint32_t r_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

// Result of deleting a vertex set: the induced hypergraph (edges fully inside
// the kept set, original order preserved) plus the relabeling in both
// directions. Kept vertices are renumbered contiguously, preserving order.
struct InducedSubgraph {
  Hypergraph graph;
  std::vector<Vertex> old_of_new;  // new id -> original id
  std::vector<Vertex> new_of_old;  // original id -> new id, kNoVertex if removed
};

InducedSubgraph remove_vertices(const Hypergraph& h,
                                const std::vector<Vertex>& removed);

// One edge of an oriented hypergraph: a tail plus r-1 heads (heads sorted).
struct OrientedEdge {
  Vertex tail = 0;
  std::vector<Vertex> heads;

  Edge unoriented() const;

  friend bool operator==(const OrientedEdge& a, const OrientedEdge& b) {
    return a.tail == b.tail && a.heads == b.heads;
  }
};

// r-uniform hypergraph whose every edge carries a tail orientation. Stored as
// an edge multiset in insertion order, like Hypergraph.
class OrientedHypergraph {
 public:
  OrientedHypergraph(std::uint32_t n, std::uint32_t r,
                     std::vector<OrientedEdge> edges);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t m() const { return edges_.size(); }
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const OrientedEdge& edge(EdgeIndex i) const { return edges_[i]; }

  // Edge indices with tail v, in insertion order.
  const std::vector<EdgeIndex>& out_edges(Vertex v) const {
    return out_edges_[v];
  }
  std::uint64_t out_degree(Vertex v) const { return out_edges_[v].size(); }

  // Forgets orientations; preserves edge order and multiplicity.
  Hypergraph unoriented() const;

  friend bool operator==(const OrientedHypergraph& a,
                         const OrientedHypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  std::uint32_t n_;
  std::uint32_t r_;
  std::vector<OrientedEdge> edges_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
};

}  // namespace rhg
