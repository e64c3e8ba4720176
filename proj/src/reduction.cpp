#include "rhg/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rhg/util.hpp"

namespace rhg {

ProbabilitySplit split_probability(double p, std::uint32_t n,
                                   std::uint64_t total_edges) {
  if (n < 2 || total_edges == 0)
    throw std::invalid_argument("split: need n >= 2 and a nonempty edge set");
  ProbabilitySplit out;
  out.p1 = std::log(static_cast<double>(n)) / static_cast<double>(total_edges);
  if (!(p >= out.p1) || !(p < 1.0))
    throw std::domain_error("split: need p1 <= p < 1");
  out.p2 = 1.0 - (1.0 - p) / (1.0 - out.p1);
  return out;
}

double acceptance_ratio(double p2, std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("acceptance ratio: r must be >= 2");
  if (!(p2 >= 0.0 && p2 <= 1.0))
    throw std::invalid_argument("acceptance ratio: p2 outside [0,1]");
  if (p2 == 0.0) return 1.0 / static_cast<double>(r);  // the p2 -> 0 limit
  return (1.0 - std::pow(1.0 - p2, 1.0 / static_cast<double>(r))) / p2;
}

Contraction contract(const Hypergraph& h2, const Edge& edge, double p2,
                     Rng& rng) {
  const std::uint32_t n = h2.n();
  const std::uint32_t r = h2.r();
  Edge e = edge;
  std::sort(e.begin(), e.end());
  if (e.size() != r) throw std::invalid_argument("contract: edge arity");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= n) throw std::invalid_argument("contract: vertex out of range");
    if (i > 0 && e[i] == e[i - 1])
      throw std::invalid_argument("contract: repeated vertex");
  }

  ContractionMap map;
  map.contracted_edge = e;
  map.merged = n - r;  // the merger takes the final contracted id
  map.new_of_old.assign(n, 0);
  map.old_of_new.assign(n - r + 1, kNoVertex);
  std::vector<bool> in_edge(n, false);
  for (Vertex v : e) in_edge[v] = true;
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_edge[v]) {
      map.new_of_old[v] = map.merged;
    } else {
      map.new_of_old[v] = next;
      map.old_of_new[next] = v;
      ++next;
    }
  }

  const double q = acceptance_ratio(p2, r);
  std::vector<Edge> images;
  std::map<Edge, bool> seen;
  auto push_unique = [&](Edge image) {
    if (seen.emplace(image, true).second) images.push_back(std::move(image));
  };

  for (EdgeIndex idx = 0; idx < h2.m(); ++idx) {
    const Edge& f = h2.edge(idx);
    std::uint32_t overlap = 0;
    Vertex shared = kNoVertex;
    for (Vertex v : f)
      if (in_edge[v]) {
        ++overlap;
        shared = v;
      }
    if (overlap >= 2) continue;  // no single replacement exists; drop
    if (overlap == 0) {
      Edge image;
      image.reserve(r);
      for (Vertex v : f) image.push_back(map.new_of_old[v]);
      push_unique(std::move(image));  // relabeling is monotone: stays sorted
      continue;
    }
    CandidateDecision dec;
    dec.source = idx;
    dec.dropped = shared;
    dec.accepted = rng.bernoulli(q);
    if (dec.accepted) {
      Edge image;
      image.reserve(r);
      for (Vertex v : f)
        if (v != shared) image.push_back(map.new_of_old[v]);
      image.push_back(map.merged);  // largest id, keeps the edge sorted
      dec.image = image;
      push_unique(std::move(image));
    }
    map.decisions.push_back(std::move(dec));
  }

  return Contraction{Hypergraph(n - r + 1, r, std::move(images), true),
                     std::move(map)};
}

Contraction contract(const Hypergraph& h2, const Edge& edge, double p2,
                     Seed seed) {
  Rng rng(seed);
  return contract(h2, edge, p2, rng);
}

const char* to_string(LiftFailure f) {
  switch (f) {
    case LiftFailure::merged_interior:
      return "merged_interior";
    case LiftFailure::preimage_conflict:
      return "preimage_conflict";
  }
  return "unknown";
}

LiftOutcome lift_cycle(const LooseHamiltonCycle& inner,
                       const ContractionMap& map, const Hypergraph& h2,
                       const Edge& edge) {
  Edge e = edge;
  std::sort(e.begin(), e.end());
  if (e != map.contracted_edge)
    throw std::invalid_argument("lift: edge does not match the map");
  const std::uint32_t n_star =
      static_cast<std::uint32_t>(map.old_of_new.size());
  const std::uint32_t r = h2.r();
  const std::uint32_t step = r - 1;
  if (inner.order.size() != n_star || n_star % step != 0)
    throw std::invalid_argument("lift: cycle does not fit the contracted size");
  const std::uint32_t blocks = n_star / step;

  std::size_t pos = n_star;
  for (std::size_t i = 0; i < inner.order.size(); ++i)
    if (inner.order[i] == map.merged) {
      pos = i;
      break;
    }
  if (pos == n_star)
    throw std::invalid_argument("lift: merged vertex missing from the cycle");
  if (pos % step != 0) return LiftOutcome{std::nullopt, LiftFailure::merged_interior};

  auto block_set = [&](std::uint32_t b) {
    Edge out;
    out.reserve(r);
    for (std::uint32_t j = 0; j < r; ++j)
      out.push_back(inner.order[(static_cast<std::size_t>(b) * step + j) %
                                n_star]);
    std::sort(out.begin(), out.end());
    return out;
  };

  // Preimage provenance: image edge -> accepted (source, dropped) pairs.
  std::map<Edge, std::vector<const CandidateDecision*>> preimages;
  for (const CandidateDecision& dec : map.decisions) {
    if (!dec.accepted) continue;
    if (dec.source >= h2.m())
      throw std::invalid_argument("lift: decision source out of range");
    preimages[dec.image].push_back(&dec);
  }

  const std::uint32_t entering = static_cast<std::uint32_t>(pos) / step;
  const std::uint32_t leaving = (entering + blocks - 1) % blocks;
  auto find_preimages =
      [&](std::uint32_t b) -> const std::vector<const CandidateDecision*>& {
    auto it = preimages.find(block_set(b));
    if (it == preimages.end())
      throw std::invalid_argument("lift: cycle edge has no recorded preimage");
    return it->second;
  };
  const std::vector<const CandidateDecision*>& before = find_preimages(leaving);
  const std::vector<const CandidateDecision*>& after = find_preimages(entering);

  for (const CandidateDecision* a : before) {
    for (const CandidateDecision* b : after) {
      if (a->dropped == b->dropped) continue;
      std::vector<Vertex> order;
      order.reserve(n_star + r - 1);
      for (std::size_t i = 0; i < n_star; ++i) {
        const Vertex v = inner.order[i];
        if (i != pos) {
          order.push_back(map.old_of_new[v]);
          continue;
        }
        // The merged junction unfolds into: the vertex the preceding edge
        // lost, the contracted edge's interior, the vertex the following
        // edge lost.
        order.push_back(a->dropped);
        for (Vertex w : map.contracted_edge)
          if (w != a->dropped && w != b->dropped) order.push_back(w);
        order.push_back(b->dropped);
      }
      return LiftOutcome{std::move(order), std::nullopt};
    }
  }
  return LiftOutcome{std::nullopt, LiftFailure::preimage_conflict};
}

std::optional<LooseHamiltonCycle> bind_cycle(const Hypergraph& host,
                                             const std::vector<Vertex>& order) {
  const std::uint32_t n = host.n();
  const std::uint32_t r = host.r();
  if (r < 2 || order.size() != n || n % (r - 1) != 0) return std::nullopt;
  const std::uint32_t blocks = n / (r - 1);
  std::map<Edge, EdgeIndex> index;
  for (EdgeIndex i = 0; i < host.m(); ++i)
    index.emplace(host.edge(i), i);  // first occurrence wins
  LooseHamiltonCycle cycle;
  cycle.order = order;
  cycle.edges.reserve(blocks);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    Edge block;
    block.reserve(r);
    for (std::uint32_t j = 0; j < r; ++j)
      block.push_back(
          order[(static_cast<std::size_t>(b) * (r - 1) + j) % n]);
    std::sort(block.begin(), block.end());
    auto it = index.find(block);
    if (it == index.end()) return std::nullopt;
    cycle.edges.push_back(it->second);
  }
  return cycle;
}

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::lifted:
      return "lifted";
    case ReductionStatus::no_anchor:
      return "no_anchor";
    case ReductionStatus::inner_not_found:
      return "inner_not_found";
    case ReductionStatus::inner_budget_exceeded:
      return "inner_budget_exceeded";
    case ReductionStatus::not_liftable:
      return "not_liftable";
  }
  return "unknown";
}

ReductionResult reduce_and_solve(const Hypergraph& h, std::optional<double> p,
                                 Seed seed, std::uint64_t budget) {
  const std::uint32_t n = h.n();
  const std::uint32_t r = h.r();
  if (r < 2 || n < r)
    throw std::invalid_argument("reduction: need n >= r >= 2");
  if (n % (r - 1) != 0)
    throw std::invalid_argument("reduction: (r-1) must divide n");
  const std::uint64_t total = binom(n, r);
  const double density =
      p ? *p : static_cast<double>(h.m()) / static_cast<double>(total);

  ReductionResult res;
  res.split = split_probability(density, n, total);
  const double p1 = res.split.p1;
  const double p2 = res.split.p2;

  Rng rng(seed);
  // Thin each present edge into the layers: exclusive-1, exclusive-2, both,
  // with probabilities proportional to p1(1-p2), (1-p1)p2, p1*p2.
  const double c1 = p1 * (1.0 - p2) / density;
  const double c2 = c1 + (1.0 - p1) * p2 / density;
  for (EdgeIndex i = 0; i < h.m(); ++i) {
    const double u = rng.uniform();
    if (u < c1) {
      res.anchor_layer.push_back(i);
    } else if (u < c2) {
      res.body_layer.push_back(i);
    } else {
      res.anchor_layer.push_back(i);
      res.body_layer.push_back(i);
    }
  }
  if (res.anchor_layer.empty()) {
    res.status = ReductionStatus::no_anchor;
    return res;
  }

  Edge anchor = h.edge(res.anchor_layer.front());
  for (EdgeIndex i : res.anchor_layer)
    anchor = std::min(anchor, h.edge(i));
  res.anchor = anchor;

  std::vector<Edge> body;
  body.reserve(res.body_layer.size());
  for (EdgeIndex i : res.body_layer) body.push_back(h.edge(i));
  Hypergraph h2(n, r, std::move(body));

  Contraction contraction = contract(h2, anchor, p2, rng);

  CycleSearchOptions opts;
  opts.budget = budget;
  opts.anchor = contraction.map.merged;
  opts.anchor_as_junction = true;
  CycleSearch junction_search = find_loose_hamilton(contraction.graph, opts);
  res.inner = junction_search;
  if (junction_search.status == SearchStatus::budget_exceeded) {
    res.status = ReductionStatus::inner_budget_exceeded;
    return res;
  }
  if (junction_search.status == SearchStatus::found) {
    LiftOutcome lifted =
        lift_cycle(*junction_search.cycle, contraction.map, h2, anchor);
    if (lifted.order) {
      std::optional<LooseHamiltonCycle> bound = bind_cycle(h, *lifted.order);
      if (!bound)
        throw std::logic_error("reduction: lifted cycle missing from host");
      res.cycle = std::move(bound);
      res.status = ReductionStatus::lifted;
      return res;
    }
    res.lift_failure = lifted.failure;
    res.status = ReductionStatus::not_liftable;
    return res;
  }

  // No cycle passes through the merged vertex as a junction. Search without
  // the constraint to tell "no cycle at all" from "cycles, none liftable".
  opts.anchor_as_junction = false;
  CycleSearch any_search = find_loose_hamilton(contraction.graph, opts);
  res.inner = any_search;
  if (any_search.status == SearchStatus::found) {
    res.status = ReductionStatus::not_liftable;
    res.lift_failure = LiftFailure::merged_interior;
  } else if (any_search.status == SearchStatus::budget_exceeded) {
    res.status = ReductionStatus::inner_budget_exceeded;
  } else {
    res.status = ReductionStatus::inner_not_found;
  }
  return res;
}

}  // namespace rhg
