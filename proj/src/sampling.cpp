#include "rhg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rhg/util.hpp"

namespace rhg {

namespace {

void check_base(const ModelParams& params) {
  if (params.r < 2) throw std::invalid_argument("model: r must be >= 2");
  if (params.n < params.r)
    throw std::invalid_argument("model: n must be >= r");
}

double require_p(const ModelParams& params) {
  if (!params.p) throw std::invalid_argument("model: p required");
  if (*params.p < 0.0 || *params.p > 1.0)
    throw std::invalid_argument("model: p outside [0,1]");
  return *params.p;
}

Edge edge_of_rank(std::uint64_t rank, std::uint32_t /*n*/, std::uint32_t r) {
  std::vector<std::uint32_t> s = subset_unrank(rank, r);
  return Edge(s.begin(), s.end());
}

// Maps an (r-1)-subset of {0,..,n-2} to actual vertex ids, skipping v.
Edge heads_around(const std::vector<std::uint32_t>& s, Vertex v) {
  Edge heads(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    heads[i] = s[i] < v ? s[i] : s[i] + 1;
  return heads;
}

}  // namespace

Hypergraph sample_fixed_size(const ModelParams& params, Seed seed) {
  check_base(params);
  if (!params.m) throw std::invalid_argument("model: m required");
  const std::uint64_t total = binom(params.n, params.r);
  if (*params.m > total)
    throw std::invalid_argument("model: m exceeds C(n,r)");
  Rng rng(seed);
  std::vector<std::uint64_t> ranks = rng.sample_subset(total, *params.m);
  std::vector<Edge> edges;
  edges.reserve(ranks.size());
  for (std::uint64_t rk : ranks)
    edges.push_back(edge_of_rank(rk, params.n, params.r));
  return Hypergraph(params.n, params.r, std::move(edges), true);
}

Hypergraph sample_binomial(const ModelParams& params, Rng& rng) {
  check_base(params);
  const double p = require_p(params);
  const std::uint64_t total = binom(params.n, params.r);
  std::vector<Edge> edges;
  for (std::uint64_t rk = 0; rk < total; ++rk)
    if (rng.bernoulli(p)) edges.push_back(edge_of_rank(rk, params.n, params.r));
  return Hypergraph(params.n, params.r, std::move(edges), true);
}

Hypergraph sample_binomial(const ModelParams& params, Seed seed) {
  Rng rng(seed);
  return sample_binomial(params, rng);
}

OrientedHypergraph sample_oriented_binomial(const ModelParams& params,
                                            Rng& rng) {
  check_base(params);
  const double p = require_p(params);
  const std::uint64_t total = binom(params.n, params.r);
  std::vector<OrientedEdge> edges;
  for (std::uint64_t rk = 0; rk < total; ++rk) {
    Edge base = edge_of_rank(rk, params.n, params.r);
    for (std::uint32_t i = 0; i < params.r; ++i) {
      if (!rng.bernoulli(p)) continue;
      OrientedEdge e;
      e.tail = base[i];
      for (std::uint32_t j = 0; j < params.r; ++j)
        if (j != i) e.heads.push_back(base[j]);
      edges.push_back(std::move(e));
    }
  }
  return OrientedHypergraph(params.n, params.r, std::move(edges));
}

OrientedHypergraph sample_oriented_binomial(const ModelParams& params,
                                            Seed seed) {
  Rng rng(seed);
  return sample_oriented_binomial(params, rng);
}

OrientedHypergraph sample_out_model(const ModelParams& params, Rng& rng) {
  check_base(params);
  if (!params.d) throw std::invalid_argument("model: d required");
  const std::uint64_t candidates = binom(params.n - 1, params.r - 1);
  std::vector<OrientedEdge> edges;
  edges.reserve(static_cast<std::size_t>(params.n) * *params.d);
  for (Vertex v = 0; v < params.n; ++v) {
    for (std::uint32_t k = 0; k < *params.d; ++k) {
      std::uint64_t rk = rng.below(candidates);
      OrientedEdge e;
      e.tail = v;
      e.heads = heads_around(subset_unrank(rk, params.r - 1), v);
      edges.push_back(std::move(e));
    }
  }
  return OrientedHypergraph(params.n, params.r, std::move(edges));
}

OrientedHypergraph sample_out_model(const ModelParams& params, Seed seed) {
  Rng rng(seed);
  return sample_out_model(params, rng);
}

std::vector<Edge> sample_uniform_matching(std::uint32_t n, std::uint32_t r,
                                          Rng& rng) {
  if (r < 2 || n % r != 0)
    throw std::invalid_argument("matching: r must divide n");
  std::vector<Vertex> unmatched(n);
  for (Vertex v = 0; v < n; ++v) unmatched[v] = v;
  std::vector<Edge> out;
  out.reserve(n / r);
  while (!unmatched.empty()) {
    // lowest unmatched vertex + uniform (r-1)-subset of the rest
    Vertex v = unmatched.front();
    std::vector<std::uint64_t> pick =
        rng.sample_subset(unmatched.size() - 1, r - 1);
    Edge e{v};
    for (std::uint64_t idx : pick) e.push_back(unmatched[idx + 1]);
    std::sort(e.begin(), e.end());
    std::vector<Vertex> rest;
    rest.reserve(unmatched.size() - r);
    for (Vertex u : unmatched)
      if (!std::binary_search(e.begin(), e.end(), u)) rest.push_back(u);
    unmatched = std::move(rest);
    out.push_back(std::move(e));
  }
  return out;
}

Hypergraph sample_matching_union(const ModelParams& params, Seed seed) {
  check_base(params);
  if (!params.rho) throw std::invalid_argument("model: rho required");
  if (params.n % params.r != 0)
    throw std::invalid_argument("model: r must divide n");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < *params.rho; ++i) {
    std::vector<Edge> m = sample_uniform_matching(params.n, params.r, rng);
    edges.insert(edges.end(), m.begin(), m.end());
  }
  return Hypergraph(params.n, params.r, std::move(edges));
}

EdgeRemovalProcess::EdgeRemovalProcess(std::uint32_t n, std::uint32_t r,
                                       const std::vector<Edge>& protected_edges,
                                       Seed seed)
    : n_(n), r_(r) {
  if (r < 2 || n < r) throw std::invalid_argument("process: need n >= r >= 2");
  const std::uint64_t total = binom(n, r);
  order_.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) order_[i] = i;
  Rng rng(seed);
  rng.shuffle(order_);
  present_.assign(total, true);
  protected_.assign(total, false);
  for (Edge e : protected_edges) {
    std::sort(e.begin(), e.end());
    if (e.size() != r) throw std::invalid_argument("process: bad edge arity");
    std::vector<std::uint32_t> s(e.begin(), e.end());
    protected_[subset_rank(s)] = true;
  }
  m_ = total;
}

bool EdgeRemovalProcess::advance() {
  if (done()) throw std::logic_error("process: already exhausted");
  std::uint64_t rank = order_[t_++];
  std::vector<std::uint32_t> s = subset_unrank(rank, r_);
  last_edge_ = Edge(s.begin(), s.end());
  last_protected_ = protected_[rank];
  if (!protected_[rank] && present_[rank]) {
    present_[rank] = false;
    --m_;
    return true;
  }
  return false;
}

Hypergraph EdgeRemovalProcess::current() const {
  std::vector<Edge> edges;
  edges.reserve(m_);
  for (std::uint64_t rk = 0; rk < present_.size(); ++rk) {
    if (!present_[rk]) continue;
    std::vector<std::uint32_t> s = subset_unrank(rk, r_);
    edges.emplace_back(s.begin(), s.end());
  }
  return Hypergraph(n_, r_, std::move(edges), true);
}

}  // namespace rhg
