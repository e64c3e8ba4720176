#include "rhg/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "rhg/util.hpp"

namespace rhg {

namespace {

void canonicalize_edge(Edge& e, std::uint32_t n, std::uint32_t r) {
  if (e.size() != r) throw std::invalid_argument("edge arity != r");
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= n) throw std::invalid_argument("edge vertex out of range");
    if (i > 0 && e[i] == e[i - 1])
      throw std::invalid_argument("edge has a repeated vertex");
  }
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t r,
                       std::vector<Edge> edges, bool require_simple)
    : n_(n), r_(r), edges_(std::move(edges)), incident_(n) {
  if (r < 2) throw std::invalid_argument("Hypergraph: r must be >= 2");
  for (Edge& e : edges_) canonicalize_edge(e, n_, r_);
  if (require_simple && !is_simple())
    throw std::invalid_argument("Hypergraph: repeated edge in simple graph");
  std::vector<EdgeIndex> order(edges_.size());
  for (EdgeIndex i = 0; i < edges_.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return edges_[a] != edges_[b] ? edges_[a] < edges_[b] : a < b;
  });
  for (EdgeIndex i : order)
    for (Vertex v : edges_[i]) incident_[v].push_back(i);
}

Hypergraph Hypergraph::complete(std::uint32_t n, std::uint32_t r) {
  std::vector<Edge> edges;
  if (n >= r) {
    edges.reserve(binom(n, r));
    std::vector<std::uint32_t> s(r);
    for (std::uint32_t i = 0; i < r; ++i) s[i] = i;
    do {
      edges.emplace_back(s.begin(), s.end());
    } while (next_subset(s, n));
  }
  return Hypergraph(n, r, std::move(edges), true);
}

std::uint64_t Hypergraph::codegree(Vertex v, Vertex w) const {
  std::uint64_t c = 0;
  for (EdgeIndex i : incident_[v])
    if (std::binary_search(edges_[i].begin(), edges_[i].end(), w)) ++c;
  return c;
}

std::uint64_t Hypergraph::max_degree() const {
  std::uint64_t d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::uint64_t Hypergraph::min_degree() const {
  if (n_ == 0) return 0;
  std::uint64_t d = degree(0);
  for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::uint64_t Hypergraph::max_codegree() const {
  std::uint64_t c = 0;
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w = v + 1; w < n_; ++w) c = std::max(c, codegree(v, w));
  return c;
}

bool Hypergraph::is_simple() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Hypergraph::has_edge(const Edge& e) const {
  if (e.empty() || e[0] >= n_) return false;
  for (EdgeIndex i : incident_[e[0]])
    if (edges_[i] == e) return true;
  return false;
}

InducedSubgraph remove_vertices(const Hypergraph& h,
                                const std::vector<Vertex>& removed) {
  std::vector<bool> gone(h.n(), false);
  for (Vertex v : removed) {
    if (v >= h.n()) throw std::invalid_argument("remove_vertices: bad vertex");
    gone[v] = true;
  }
  std::vector<Vertex> new_of_old(h.n(), kNoVertex);
  std::vector<Vertex> old_of_new;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (!gone[v]) {
      new_of_old[v] = static_cast<Vertex>(old_of_new.size());
      old_of_new.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    bool inside = true;
    for (Vertex v : e) inside = inside && !gone[v];
    if (!inside) continue;
    Edge img(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) img[i] = new_of_old[e[i]];
    kept.push_back(std::move(img));
  }
  Hypergraph g(static_cast<std::uint32_t>(old_of_new.size()), h.r(),
               std::move(kept));
  return InducedSubgraph{std::move(g), std::move(old_of_new),
                         std::move(new_of_old)};
}

Edge OrientedEdge::unoriented() const {
  Edge e = heads;
  e.push_back(tail);
  std::sort(e.begin(), e.end());
  return e;
}

OrientedHypergraph::OrientedHypergraph(std::uint32_t n, std::uint32_t r,
                                       std::vector<OrientedEdge> edges)
    : n_(n), r_(r), edges_(std::move(edges)), out_edges_(n) {
  if (r < 2) throw std::invalid_argument("OrientedHypergraph: r must be >= 2");
  for (OrientedEdge& e : edges_) {
    if (e.heads.size() + 1 != r)
      throw std::invalid_argument("oriented edge arity != r");
    if (e.tail >= n_) throw std::invalid_argument("tail out of range");
    std::sort(e.heads.begin(), e.heads.end());
    for (std::size_t i = 0; i < e.heads.size(); ++i) {
      if (e.heads[i] >= n_) throw std::invalid_argument("head out of range");
      if (e.heads[i] == e.tail)
        throw std::invalid_argument("tail repeated among heads");
      if (i > 0 && e.heads[i] == e.heads[i - 1])
        throw std::invalid_argument("repeated head");
    }
  }
  for (EdgeIndex i = 0; i < edges_.size(); ++i)
    out_edges_[edges_[i].tail].push_back(i);
}

Hypergraph OrientedHypergraph::unoriented() const {
  std::vector<Edge> plain;
  plain.reserve(edges_.size());
  for (const OrientedEdge& e : edges_) plain.push_back(e.unoriented());
  return Hypergraph(n_, r_, std::move(plain));
}

}  // namespace rhg
