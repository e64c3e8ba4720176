#include "rhg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rhg/util.hpp"

namespace rhg {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

class CycleSearcher {
 public:
  CycleSearcher(const Hypergraph& h, const CycleSearchOptions& opts)
      : h_(h), opts_(opts), n_(h.n()), r_(h.r()) {}

  CycleSearch run() {
    CycleSearch out;
    if (n_ == 0 || n_ % (r_ - 1) != 0 || n_ / (r_ - 1) < 3) {
      out.status = SearchStatus::not_found;
      return out;
    }
    q_ = n_ / (r_ - 1);
    covered_.assign(n_, false);
    chain_.clear();
    exits_.clear();
    const Vertex anchor = opts_.anchor;
    if (anchor >= n_) {
      out.status = SearchStatus::not_found;
      return out;
    }
    if (opts_.budget == 0) {
      // zero nodes granted: nothing was examined, so nothing was decided
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
    for (EdgeIndex first : h_.incident(anchor)) {
      const Edge& e = h_.edge(first);
      for (Vertex a : e) {
        if (opts_.anchor_as_junction && a != anchor) continue;
        for (Vertex b : e) {
          if (b == a) continue;
          start_ = a;
          for (Vertex v : e) covered_[v] = true;
          chain_.push_back(first);
          exits_.push_back(b);
          bool hit = dfs(static_cast<std::uint32_t>(n_) - r_, b);
          if (hit) {
            // the full chain is still on the stack
            out.status = SearchStatus::found;
            out.cycle = build_cycle();
            out.nodes = nodes_;
            return out;
          }
          chain_.pop_back();
          exits_.pop_back();
          for (Vertex v : e) covered_[v] = false;
          if (budget_hit_) {
            out.status = SearchStatus::budget_exceeded;
            out.nodes = nodes_;
            return out;
          }
        }
      }
    }
    out.status = SearchStatus::not_found;
    out.nodes = nodes_;
    return out;
  }

 private:
  bool spend_node() {
    if (nodes_ >= opts_.budget) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  // cur: junction the next edge must contain; uncovered: count left.
  bool dfs(std::uint32_t uncovered, Vertex cur) {
    if (!spend_node()) return false;
    if (chain_.size() + 1 == q_) return close_cycle(cur);
    if (!feasible(uncovered, cur)) return false;
    for (EdgeIndex i : h_.incident(cur)) {
      const Edge& e = h_.edge(i);
      bool ok = true;
      for (Vertex v : e) ok = ok && (v == cur || !covered_[v]);
      if (!ok) continue;
      for (Vertex v : e) covered_[v] = true;
      chain_.push_back(i);
      for (Vertex b : e) {
        if (b == cur) continue;
        exits_.push_back(b);
        if (dfs(uncovered - (r_ - 1), b)) return true;
        exits_.pop_back();
        if (budget_hit_) break;
      }
      chain_.pop_back();
      // cur stays covered by the previous edge; everything else in e was fresh
      for (Vertex v : e)
        if (v != cur) covered_[v] = false;
      if (budget_hit_) return false;
    }
    return false;
  }

  bool close_cycle(Vertex cur) {
    if (cur == start_) return false;  // the final edge needs two junctions
    for (EdgeIndex i : h_.incident(cur)) {
      const Edge& e = h_.edge(i);
      bool has_start = false;
      bool ok = true;
      for (Vertex v : e) {
        if (v == start_) {
          has_start = true;
        } else if (v != cur && covered_[v]) {
          ok = false;
          break;
        }
      }
      if (!has_start || !ok) continue;
      // all other vertices uncovered; they are exactly the r-2 missing ones
      chain_.push_back(i);
      exits_.push_back(start_);
      return true;
    }
    return false;
  }

  // Every uncovered vertex needs an incident edge inside
  // uncovered + {cur, start}, and the uncovered region plus the closing
  // junction must be reachable from cur through such edges.
  bool feasible(std::uint32_t uncovered, Vertex cur) {
    allowed_.assign(n_, false);
    for (Vertex v = 0; v < n_; ++v) allowed_[v] = !covered_[v];
    allowed_[cur] = true;
    allowed_[start_] = true;
    for (Vertex v = 0; v < n_; ++v) {
      if (covered_[v]) continue;
      bool has = false;
      for (EdgeIndex i : h_.incident(v)) {
        const Edge& e = h_.edge(i);
        bool inside = true;
        for (Vertex w : e) inside = inside && allowed_[w];
        if (inside) {
          has = true;
          break;
        }
      }
      if (!has) return false;
    }
    // BFS from cur over edges inside the allowed region
    visited_.assign(n_, false);
    queue_.clear();
    visited_[cur] = true;
    queue_.push_back(cur);
    std::size_t head = 0;
    std::uint32_t seen_uncovered = 0;
    bool seen_start = false;
    while (head < queue_.size()) {
      Vertex v = queue_[head++];
      for (EdgeIndex i : h_.incident(v)) {
        const Edge& e = h_.edge(i);
        bool inside = true;
        for (Vertex w : e) inside = inside && allowed_[w];
        if (!inside) continue;
        for (Vertex w : e) {
          if (visited_[w]) continue;
          visited_[w] = true;
          if (!covered_[w]) ++seen_uncovered;
          if (w == start_) seen_start = true;
          queue_.push_back(w);
        }
      }
    }
    return seen_uncovered == uncovered && seen_start;
  }

  LooseHamiltonCycle build_cycle() const {
    LooseHamiltonCycle c;
    c.edges = chain_;
    Vertex enter = start_;
    for (std::size_t b = 0; b < chain_.size(); ++b) {
      const Edge& e = h_.edge(chain_[b]);
      Vertex exit = exits_[b];
      c.order.push_back(enter);
      for (Vertex v : e)
        if (v != enter && v != exit) c.order.push_back(v);
      enter = exit;
    }
    return c;
  }

  const Hypergraph& h_;
  const CycleSearchOptions& opts_;
  std::uint32_t n_, r_;
  std::uint32_t q_ = 0;
  Vertex start_ = 0;
  std::vector<bool> covered_;
  std::vector<EdgeIndex> chain_;
  std::vector<Vertex> exits_;
  std::vector<bool> allowed_;
  std::vector<bool> visited_;
  std::vector<Vertex> queue_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

CycleSearch find_loose_hamilton(const Hypergraph& h,
                                const CycleSearchOptions& opts) {
  return CycleSearcher(h, opts).run();
}

namespace {

struct MatchingSearcher {
  const Hypergraph& h;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<bool> covered;
  std::vector<EdgeIndex> picked;

  bool dfs(std::uint32_t uncovered) {
    if (nodes >= budget) {
      budget_hit = true;
      return false;
    }
    ++nodes;
    if (uncovered == 0) return true;
    Vertex v = 0;
    while (covered[v]) ++v;
    for (EdgeIndex i : h.incident(v)) {
      const Edge& e = h.edge(i);
      bool ok = true;
      for (Vertex w : e) ok = ok && !covered[w];
      if (!ok) continue;
      for (Vertex w : e) covered[w] = true;
      picked.push_back(i);
      if (dfs(uncovered - h.r())) return true;
      picked.pop_back();
      for (Vertex w : e) covered[w] = false;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

MatchingSearch find_perfect_matching(const Hypergraph& h,
                                     std::uint64_t budget) {
  MatchingSearch out;
  if (h.n() % h.r() != 0) {
    out.status = SearchStatus::not_found;
    return out;
  }
  MatchingSearcher s{h, budget};
  s.covered.assign(h.n(), false);
  bool hit = s.dfs(h.n());
  out.nodes = s.nodes;
  if (hit) {
    out.status = SearchStatus::found;
    out.matching = PerfectMatching{s.picked};
  } else {
    out.status =
        s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::not_found;
  }
  return out;
}

namespace {

// Counting core. With n <= 64 results are memoized on the covered bitmask.
struct MatchingCounter {
  const Hypergraph& h;
  std::vector<bool> covered;
  std::uint64_t mask = 0;  // valid when h.n() <= 64
  bool use_mask;
  std::unordered_map<std::uint64_t, BigInt> memo;

  explicit MatchingCounter(const Hypergraph& hh)
      : h(hh), covered(hh.n(), false), use_mask(hh.n() <= 64) {}

  BigInt count(std::uint32_t uncovered) {
    if (uncovered == 0) return 1;
    if (uncovered % h.r() != 0) return 0;
    if (use_mask) {
      auto it = memo.find(mask);
      if (it != memo.end()) return it->second;
    }
    Vertex v = 0;
    while (covered[v]) ++v;
    BigInt total = 0;
    for (EdgeIndex i : h.incident(v)) {
      const Edge& e = h.edge(i);
      bool ok = true;
      for (Vertex w : e) ok = ok && !covered[w];
      if (!ok) continue;
      set_edge(e, true);
      total += count(uncovered - h.r());
      set_edge(e, false);
    }
    if (use_mask) memo.emplace(mask, total);
    return total;
  }

  void set_edge(const Edge& e, bool value) {
    for (Vertex w : e) {
      covered[w] = value;
      if (use_mask) mask ^= 1ULL << w;
    }
  }
};

}  // namespace

BigInt count_matchings(const Hypergraph& h) {
  return count_matchings_outside(h, {});
}

BigInt count_matchings_outside(const Hypergraph& h,
                               const std::vector<Vertex>& removed) {
  MatchingCounter c(h);
  std::uint32_t uncovered = h.n();
  for (Vertex v : removed) {
    if (v >= h.n())
      throw std::invalid_argument("count_matchings_outside: bad vertex");
    if (!c.covered[v]) {
      c.covered[v] = true;
      if (c.use_mask) c.mask ^= 1ULL << v;
      --uncovered;
    }
  }
  return c.count(uncovered);
}

WeightProfile matching_weight_profile(const Hypergraph& h, bool exhaustive,
                                      std::uint64_t samples, Seed seed) {
  WeightProfile out;
  out.exhaustive = exhaustive;
  const std::uint64_t total = binom(h.n(), h.r());
  std::vector<std::uint64_t> ranks;
  if (exhaustive) {
    ranks.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) ranks[i] = i;
  } else {
    if (samples == 0 || samples > total)
      throw std::invalid_argument("weight_profile: bad sample count");
    Rng rng(seed);
    ranks = rng.sample_subset(total, samples);
  }
  BigInt sum = 0;
  BigInt best = 0;
  for (std::uint64_t rk : ranks) {
    std::vector<std::uint32_t> s = subset_unrank(rk, h.r());
    Edge removed(s.begin(), s.end());
    BigInt w = count_matchings_outside(h, removed);
    sum += w;
    if (w > best) best = w;
    out.weights.emplace_back(std::move(removed), std::move(w));
  }
  const double denom = static_cast<double>(ranks.size());
  out.mean = sum.convert_to<double>() / denom;
  if (sum > 0)
    out.max_over_mean = best.convert_to<double>() * denom /
                        sum.convert_to<double>();
  return out;
}

namespace {

ProcessPoint observe(const EdgeRemovalProcess& process, bool with_counts) {
  ProcessPoint p;
  p.t = process.step();
  p.m = process.edge_count();
  Hypergraph h = process.current();
  p.max_degree = h.max_degree();
  p.min_degree = h.min_degree();
  p.max_codegree = h.max_codegree();
  const double rm = static_cast<double>(h.r()) * static_cast<double>(p.m);
  p.edge_density = rm / static_cast<double>(h.n());
  p.scaling = p.m == 0 ? INFINITY : static_cast<double>(h.n()) / rm;
  if (with_counts) {
    BigInt phi = count_matchings(h);
    if (phi > 0) {
      // ln of a big integer via its top bits
      const std::size_t bits = msb(phi);
      if (bits < 600) {
        p.log_matchings = std::log(phi.convert_to<double>());
      } else {
        BigInt shifted = phi >> (bits - 500);
        p.log_matchings = std::log(shifted.convert_to<double>()) +
                          static_cast<double>(bits - 500) * std::log(2.0);
      }
    }
    p.matchings = std::move(phi);
  }
  return p;
}

}  // namespace

std::vector<ProcessPoint> run_diagnostics(EdgeRemovalProcess& process,
                                          const DiagnosticsOptions& opts) {
  std::vector<ProcessPoint> rows;
  rows.push_back(observe(process, opts.with_matching_counts));
  std::uint64_t steps = 0;
  while (!process.done() && steps < opts.max_steps) {
    if (opts.stop_when_count_zero && opts.with_matching_counts &&
        rows.back().matchings && *rows.back().matchings == 0)
      break;
    process.advance();
    ++steps;
    ProcessPoint p = observe(process, opts.with_matching_counts);
    p.step_protected = process.last_protected();
    if (opts.with_matching_counts) {
      const std::optional<BigInt>& prev = rows.back().matchings;
      if (p.step_protected) {
        p.shrink_ratio = 0.0;
      } else if (prev && *prev > 0) {
        // xi = 1 - Phi_t/Phi_{t-1}, evaluated through the log difference
        double ratio;
        if (*p.matchings == 0) {
          ratio = 0.0;
        } else if (p.log_matchings && rows.back().log_matchings) {
          ratio = std::exp(*p.log_matchings - *rows.back().log_matchings);
        } else {
          ratio = 0.0;
        }
        p.shrink_ratio = 1.0 - ratio;
      }
    }
    rows.push_back(std::move(p));
  }
  return rows;
}

}  // namespace rhg
