#include "rhg/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "rhg/sampling.hpp"
#include "rhg/util.hpp"

namespace rhg {

namespace {

void check_params(const CouplingParams& params) {
  if (params.r < 2 || params.n <= params.r)
    throw std::invalid_argument("coupling: need n > r >= 2");
  if (!(params.eps > 0.0))
    throw std::invalid_argument("coupling: eps must be > 0");
  if (params.rho < 1) throw std::invalid_argument("coupling: rho must be >= 1");
  if (!(params.eps_prime > 0.0))
    throw std::invalid_argument("coupling: eps_prime must be > 0");
}

void check_probability(const char* name, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "coupling: derived probability " << name << " = " << value
        << " outside [0,1] (n too small for this eps)";
    throw std::domain_error(msg.str());
  }
}

// Type-2 edges with at most one weak vertex become oriented "promoted" edges
// (tail = the weak vertex, or the smallest vertex when all are strong);
// type-3 edges with more than one weak vertex are retained unchanged.
struct PromotedRetained {
  std::vector<OrientedEdge> promoted;
  std::vector<OrientedEdge> retained;
};

PromotedRetained split_type23(const EdgeTypeSplit& split,
                              const std::vector<bool>& weak) {
  PromotedRetained out;
  for (const Edge& e : split.type2.edges()) {
    Vertex weak_tail = kNoVertex;
    int weak_count = 0;
    for (Vertex v : e)
      if (weak[v]) {
        weak_tail = v;
        ++weak_count;
      }
    if (weak_count > 1) continue;
    OrientedEdge oe;
    oe.tail = weak_count == 1 ? weak_tail : e.front();
    for (Vertex v : e)
      if (v != oe.tail) oe.heads.push_back(v);
    out.promoted.push_back(std::move(oe));
  }
  for (const OrientedEdge& e : split.type3.edges()) {
    int weak_count = weak[e.tail] ? 1 : 0;
    for (Vertex h : e.heads)
      if (weak[h]) ++weak_count;
    if (weak_count > 1) out.retained.push_back(e);
  }
  return out;
}

std::vector<bool> weak_flags(std::uint32_t n,
                             const VertexClassification& classification) {
  std::vector<bool> weak(n, false);
  for (Vertex v : classification.weak) weak[v] = true;
  return weak;
}

}  // namespace

SplitProbabilities split_probabilities(const CouplingParams& params) {
  check_params(params);
  SplitProbabilities prob;
  const double log_n = std::log(static_cast<double>(params.n));
  const double candidates =
      static_cast<double>(binom(params.n - 1, params.r - 1));
  prob.p_star = log_n / candidates;
  prob.p = (1.0 + params.eps) * prob.p_star;
  prob.p1_shadow = 0.5 * params.eps * prob.p_star;
  prob.p2 = (1.0 + 0.5 * params.eps) * prob.p_star;
  prob.p3_shadow = prob.p2;
  check_probability("p", prob.p);
  check_probability("shadow(p1)", prob.p1_shadow);
  check_probability("p2", prob.p2);
  prob.p1 = 1.0 - std::pow(1.0 - prob.p1_shadow, 1.0 / params.r);
  prob.p1_layer = 1.0 - std::pow(1.0 - prob.p1, 1.0 / params.rho);
  prob.p3 = 1.0 - std::pow(1.0 - prob.p2, 1.0 / params.r);
  check_probability("p1", prob.p1);
  check_probability("p1_layer", prob.p1_layer);
  check_probability("p3", prob.p3);
  prob.min_out_degree = static_cast<std::uint32_t>(
      std::ceil(params.eps * params.eps * log_n));
  return prob;
}

std::string describe(const SplitProbabilities& prob) {
  std::ostringstream out;
  out.precision(12);
  out << "p*        = ln(n)/C(n-1,r-1)          = " << prob.p_star << '\n'
      << "p         = (1+eps) p*                = " << prob.p << '\n'
      << "p1        = 1-(1-(eps/2)p*)^(1/r)     = " << prob.p1 << '\n'
      << "p1_layer  : (1-p1_layer)^rho = 1-p1   = " << prob.p1_layer << '\n'
      << "p2        = (1+eps/2) p*              = " << prob.p2 << '\n'
      << "p3        : (1-p3)^r = 1-p2           = " << prob.p3 << '\n'
      << "shadow(p1)= (eps/2) p* = 1-(1-p1)^r   = " << prob.p1_shadow << '\n'
      << "shadow(p3)= p2                        = " << prob.p3_shadow << '\n'
      << "picks/vertex/layer = ceil(eps^2 ln n) = " << prob.min_out_degree
      << '\n';
  return out.str();
}

EdgeTypeSplit build_split(const CouplingParams& params, Seed seed) {
  EdgeTypeSplit split;
  split.params = params;
  split.prob = split_probabilities(params);
  Rng rng(seed);
  ModelParams model;
  model.n = params.n;
  model.r = params.r;
  model.p = split.prob.p1_layer;
  split.type1_layers.reserve(params.rho);
  for (std::uint32_t i = 0; i < params.rho; ++i)
    split.type1_layers.push_back(sample_oriented_binomial(model, rng));
  model.p = split.prob.p2;
  split.type2 = sample_binomial(model, rng);
  model.p = split.prob.p3;
  split.type3 = sample_oriented_binomial(model, rng);
  return split;
}

VertexClassification classify_vertices(const EdgeTypeSplit& split) {
  const std::uint32_t n = split.params.n;
  const std::uint32_t d = split.prob.min_out_degree;
  VertexClassification out;
  out.out_degree.reserve(split.type1_layers.size());
  for (const OrientedHypergraph& layer : split.type1_layers) {
    std::vector<std::uint32_t> deg(n);
    for (Vertex v = 0; v < n; ++v)
      deg[v] = static_cast<std::uint32_t>(layer.out_degree(v));
    out.out_degree.push_back(std::move(deg));
  }
  for (Vertex v = 0; v < n; ++v) {
    bool strong = true;
    for (const std::vector<std::uint32_t>& deg : out.out_degree)
      if (deg[v] < d) {
        strong = false;
        break;
      }
    (strong ? out.strong : out.weak).push_back(v);
  }
  out.weak_fraction =
      static_cast<double>(out.weak.size()) / static_cast<double>(n);
  out.weak_fraction_bound =
      std::pow(static_cast<double>(n), -split.params.eps_prime);
  out.within_bound = out.weak_fraction <= out.weak_fraction_bound;
  return out;
}

std::string to_string(CouplingFailure failure) {
  switch (failure) {
    case CouplingFailure::none:
      return "none";
    case CouplingFailure::weak_fraction:
      return "weak_fraction";
    case CouplingFailure::promoted_degree:
      return "promoted_degree";
    case CouplingFailure::label_overflow:
      return "label_overflow";
  }
  return "unknown";
}

CouplingTranscript extract_layers(const EdgeTypeSplit& split,
                                  const VertexClassification& classification,
                                  Rng& rng) {
  const std::uint32_t n = split.params.n;
  const std::uint32_t r = split.params.r;
  const std::uint32_t rho = split.params.rho;
  const std::uint32_t d = split.prob.min_out_degree;
  if (split.type1_layers.size() != rho)
    throw std::invalid_argument("coupling: layer count does not match rho");

  CouplingTranscript tr;
  tr.split = split;
  tr.classification = classification;

  const std::vector<bool> weak = weak_flags(n, classification);
  PromotedRetained pr = split_type23(split, weak);
  tr.promoted = std::move(pr.promoted);
  tr.retained = std::move(pr.retained);

  const std::uint64_t picks_per_vertex =
      static_cast<std::uint64_t>(rho) * d;  // label draws per weak vertex
  const std::uint64_t all_candidates = binom(n - 1, r - 1);

  // Out-edge pools per vertex: promoted edges whose tail is that (weak)
  // vertex, and retained edges by tail.
  std::vector<std::vector<OrientedEdge>> s_of(n), t_of(n);
  for (const OrientedEdge& e : tr.promoted)
    if (weak[e.tail]) s_of[e.tail].push_back(e);
  for (const OrientedEdge& e : tr.retained) t_of[e.tail].push_back(e);

  // Failure checks, in order: weak fraction, then promoted out-degrees.
  if (!classification.within_bound) {
    tr.failure = CouplingFailure::weak_fraction;
  } else {
    for (Vertex v : classification.weak) {
      if (s_of[v].size() < picks_per_vertex) {
        tr.failure = CouplingFailure::promoted_degree;
        tr.failure_vertex = v;
        break;
      }
    }
  }

  // picks[layer][v] = the d chosen out-edges of v, in draw order.
  std::vector<std::vector<std::vector<OrientedEdge>>> picks(
      rho, std::vector<std::vector<OrientedEdge>>(n));

  if (tr.failure == CouplingFailure::none) {
    const std::uint64_t x_all = binom(classification.strong.size(), r - 1);
    for (Vertex v : classification.weak) {
      WeakVertexRecord rec;
      rec.v = v;
      rec.x = x_all;
      rec.y = all_candidates - x_all;
      rec.s_edges = s_of[v];
      rec.t_edges = t_of[v];
      rec.labels.reserve(picks_per_vertex);
      for (std::uint64_t i = 0; i < picks_per_vertex; ++i)
        rec.labels.push_back(rng.below(all_candidates));
      rec.scarce_draws = static_cast<std::uint32_t>(std::count_if(
          rec.labels.begin(), rec.labels.end(),
          [&](std::uint64_t a) { return a < rec.y; }));
      rec.ok = rec.scarce_draws <= rec.t_edges.size();
      if (!rec.ok) {
        tr.weak_records.push_back(std::move(rec));
        tr.failure = CouplingFailure::label_overflow;
        tr.failure_vertex = v;
        break;
      }

      // Labels are abstract until revealed: distinct values below y become a
      // uniform injection into the realized scarce edges, the rest go into a
      // uniform rho*d-subset of the promoted edges. Repeated labels repeat
      // the same revealed edge, which is exactly with-replacement sampling.
      std::vector<std::uint64_t> scarce, plentiful;
      for (std::uint64_t a : rec.labels)
        (a < rec.y ? scarce : plentiful).push_back(a);
      for (std::vector<std::uint64_t>* side : {&scarce, &plentiful}) {
        std::sort(side->begin(), side->end());
        side->erase(std::unique(side->begin(), side->end()), side->end());
      }
      std::unordered_map<std::uint64_t, const OrientedEdge*> revealed;
      std::vector<std::uint64_t> pos =
          rng.sample_sequence(rec.t_edges.size(), scarce.size());
      for (std::size_t i = 0; i < scarce.size(); ++i)
        revealed[scarce[i]] = &rec.t_edges[pos[i]];
      std::vector<std::uint64_t> sub =
          rng.sample_subset(rec.s_edges.size(), picks_per_vertex);
      rec.s_prime.reserve(picks_per_vertex);
      for (std::uint64_t idx : sub) rec.s_prime.push_back(rec.s_edges[idx]);
      pos = rng.sample_sequence(rec.s_prime.size(), plentiful.size());
      for (std::size_t i = 0; i < plentiful.size(); ++i)
        revealed[plentiful[i]] = &rec.s_prime[pos[i]];

      for (std::uint64_t i = 0; i < picks_per_vertex; ++i)
        picks[i / d][v].push_back(*revealed[rec.labels[i]]);
      tr.weak_records.push_back(std::move(rec));
    }
  }

  if (tr.failure == CouplingFailure::none) {
    // Strong vertices: d with-replacement picks per layer that always land
    // inside the realized out-edge set but are marginally uniform over all
    // C(n-1,r-1) candidates: draw abstract labels first, then reveal the
    // distinct ones as a uniform injection into the realized set.
    std::vector<std::uint64_t> labels(d);
    for (Vertex v : classification.strong) {
      for (std::uint32_t i = 0; i < rho; ++i) {
        const OrientedHypergraph& layer = split.type1_layers[i];
        const std::vector<EdgeIndex>& out = layer.out_edges(v);
        for (std::uint32_t j = 0; j < d; ++j)
          labels[j] = rng.below(all_candidates);
        std::vector<std::uint64_t> distinct = labels;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()),
                       distinct.end());
        std::vector<std::uint64_t> pos =
            rng.sample_sequence(out.size(), distinct.size());
        std::unordered_map<std::uint64_t, EdgeIndex> revealed;
        for (std::size_t j = 0; j < distinct.size(); ++j)
          revealed[distinct[j]] = out[pos[j]];
        for (std::uint32_t j = 0; j < d; ++j)
          picks[i][v].push_back(layer.edge(revealed[labels[j]]));
      }
    }
  }

  if (tr.failure == CouplingFailure::none) {
    tr.success = true;
    for (std::uint32_t i = 0; i < rho; ++i) {
      std::vector<OrientedEdge> edges;
      edges.reserve(static_cast<std::size_t>(n) * d);
      for (Vertex v = 0; v < n; ++v)
        for (const OrientedEdge& e : picks[i][v]) edges.push_back(e);
      tr.layers.emplace_back(n, r, std::move(edges));
    }
  } else {
    // Failed embeddings still deliver layers with the right marginal law:
    // fresh out-model samples, independent of everything above.
    tr.success = false;
    ModelParams model;
    model.n = n;
    model.r = r;
    model.d = d;
    tr.layers.reserve(rho);
    for (std::uint32_t i = 0; i < rho; ++i)
      tr.layers.push_back(sample_out_model(model, rng));
  }
  return tr;
}

CouplingTranscript extract_layers(const EdgeTypeSplit& split,
                                  const VertexClassification& classification,
                                  Seed seed) {
  Rng rng(seed);
  return extract_layers(split, classification, rng);
}

CouplingTranscript run_coupling(const CouplingParams& params, Seed seed) {
  EdgeTypeSplit split = build_split(params, seed);
  VertexClassification classification = classify_vertices(split);
  // Continue on the same logical stream: the split consumed the base stream,
  // the relabeling stage gets its own.
  Rng rng(seed.with_stream(seed.stream + 1));
  return extract_layers(split, classification, rng);
}

namespace {

nlohmann::json to_json(const OrientedEdge& e) {
  return nlohmann::json{{"tail", e.tail}, {"heads", e.heads}};
}

nlohmann::json to_json(const std::vector<OrientedEdge>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OrientedEdge& e : edges) arr.push_back(to_json(e));
  return arr;
}

nlohmann::json to_json(const OrientedHypergraph& h) {
  return nlohmann::json{{"n", h.n()}, {"r", h.r()}, {"edges", to_json(h.edges())}};
}

}  // namespace

std::string transcript_json(const CouplingTranscript& tr) {
  using nlohmann::json;
  const CouplingParams& params = tr.split.params;
  const SplitProbabilities& prob = tr.split.prob;
  json j;
  j["params"] = {{"n", params.n},
                 {"r", params.r},
                 {"eps", params.eps},
                 {"rho", params.rho},
                 {"eps_prime", params.eps_prime}};
  j["probabilities"] = {{"p_star", prob.p_star},
                        {"p", prob.p},
                        {"p1", prob.p1},
                        {"p1_layer", prob.p1_layer},
                        {"p2", prob.p2},
                        {"p3", prob.p3},
                        {"p1_shadow", prob.p1_shadow},
                        {"p3_shadow", prob.p3_shadow},
                        {"picks_per_vertex_per_layer", prob.min_out_degree}};
  json layers1 = json::array();
  for (const OrientedHypergraph& layer : tr.split.type1_layers)
    layers1.push_back(to_json(layer));
  j["type1_layers"] = std::move(layers1);
  json type2 = json::array();
  for (const Edge& e : tr.split.type2.edges()) type2.push_back(e);
  j["type2"] = std::move(type2);
  j["type3"] = to_json(tr.split.type3);
  j["classification"] = {
      {"out_degree", tr.classification.out_degree},
      {"strong", tr.classification.strong},
      {"weak", tr.classification.weak},
      {"weak_fraction", tr.classification.weak_fraction},
      {"weak_fraction_bound", tr.classification.weak_fraction_bound},
      {"within_bound", tr.classification.within_bound}};
  j["promoted"] = to_json(tr.promoted);
  j["retained"] = to_json(tr.retained);
  json records = json::array();
  for (const WeakVertexRecord& rec : tr.weak_records) {
    records.push_back({{"v", rec.v},
                       {"x", rec.x},
                       {"y", rec.y},
                       {"s_edges", to_json(rec.s_edges)},
                       {"s_prime", to_json(rec.s_prime)},
                       {"t_edges", to_json(rec.t_edges)},
                       {"labels", rec.labels},
                       {"scarce_draws", rec.scarce_draws},
                       {"ok", rec.ok}});
  }
  j["weak_records"] = std::move(records);
  j["failure"] = to_string(tr.failure);
  if (tr.failure_vertex)
    j["failure_vertex"] = *tr.failure_vertex;
  else
    j["failure_vertex"] = nullptr;
  j["success"] = tr.success;
  json layers = json::array();
  for (const OrientedHypergraph& layer : tr.layers)
    layers.push_back(to_json(layer));
  j["layers"] = std::move(layers);
  return j.dump(2);
}

BinomialCouple couple_binomials(std::uint64_t n_blocks, double p,
                                std::uint64_t k, std::uint64_t l, Rng& rng) {
  if (!(p >= 0.0 && p <= 0.5))
    throw std::invalid_argument("dominance: P must lie in [0, 1/2]");
  if (l < 2) throw std::invalid_argument("dominance: L must be >= 2");
  if (n_blocks < 1 || k < 1)
    throw std::invalid_argument("dominance: N and K must be >= 1");
  BinomialCouple out;
  if (p == 0.0) return out;

  const std::uint64_t block = l * k;  // Bernoulli(P/K) trials per block
  const double pk = p / static_cast<double>(k);
  // Block-hit probability P0 with 1 - P0 = (1 - P/K)^(LK); L >= 2 and
  // P <= 1/2 force P0 >= P, so thinning by P/P0 is a valid probability.
  const long double p0 =
      -std::expm1(static_cast<long double>(block) *
                   std::log1p(-static_cast<long double>(pk)));
  const double thin = static_cast<double>(static_cast<long double>(p) / p0);
  for (std::uint64_t i = 0; i < n_blocks; ++i) {
    std::uint64_t hits = rng.binomial_count(block, pk);
    out.y += hits;
    // Z_i = 1{block i hit at least once} ~ Bernoulli(P0); thinning turns the
    // sum of the Z_i into Bin(N, P) while never exceeding it.
    if (hits >= 1 && rng.bernoulli(thin)) ++out.x;
  }
  return out;
}

ChiSquare binomial_fit(const std::vector<std::uint64_t>& values,
                       std::uint64_t n_trials, double p) {
  if (values.empty()) return ChiSquare{};
  const std::uint64_t max_v =
      *std::max_element(values.begin(), values.end());
  std::vector<std::uint64_t> observed(max_v + 2, 0);  // last cell: > max_v
  for (std::uint64_t v : values) ++observed[v];
  const double total = static_cast<double>(values.size());
  std::vector<double> expected(max_v + 2, 0.0);
  long double window_mass = 0.0L;
  for (std::uint64_t v = 0; v <= max_v; ++v) {
    long double mass =
        std::exp(log_binomial_pmf(n_trials, static_cast<long double>(p), v));
    window_mass += mass;
    expected[v] = static_cast<double>(mass) * total;
  }
  long double tail = 1.0L - window_mass;
  if (tail < 0.0L) tail = 0.0L;
  expected[max_v + 1] = static_cast<double>(tail) * total;
  return chi_square_gof(observed, expected);
}

DominanceReport verify_binomial_dominance(std::uint32_t n, std::uint32_t r,
                                          double eps, double eps_prime,
                                          std::uint32_t rho,
                                          std::uint64_t trials, Seed seed) {
  if (n < 2 || r < 2 || r > n)
    throw std::invalid_argument("dominance: need n >= r >= 2");
  if (!(eps > 0.0) || !(eps_prime > 0.0) || rho < 1)
    throw std::invalid_argument("dominance: eps, eps_prime, rho must be > 0");
  const double log_n = std::log(static_cast<double>(n));
  DominanceReport rep;
  rep.n_blocks = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::llround(rho * eps * eps * log_n)));
  rep.p = std::pow(static_cast<double>(n), -eps_prime);
  const double k_raw = (r / (1.0 + 0.5 * eps)) *
                       static_cast<double>(binom(n - 1, r - 1)) /
                       (std::pow(static_cast<double>(n), eps_prime) * log_n);
  rep.k = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::llround(k_raw)));
  const double l_raw = (1.0 + 0.5 * eps) / (eps * eps * r * rho);
  const long long l_rounded = std::llround(l_raw);
  rep.l = l_rounded < 0 ? 0 : static_cast<std::uint64_t>(l_rounded);
  rep.in_regime = rep.l >= 2 && rep.p <= 0.5;
  if (!rep.in_regime || trials == 0) return rep;

  rep.trials = trials;
  rep.expected_x = static_cast<double>(rep.n_blocks) * rep.p;
  rep.expected_y = static_cast<double>(rep.l) * rep.expected_x;
  Rng rng(seed);
  std::vector<std::uint64_t> xs, ys;
  xs.reserve(trials);
  ys.reserve(trials);
  double sum_x = 0.0, sum_y = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    BinomialCouple c = couple_binomials(rep.n_blocks, rep.p, rep.k, rep.l, rng);
    if (c.x > c.y) ++rep.violations;
    xs.push_back(c.x);
    ys.push_back(c.y);
    sum_x += static_cast<double>(c.x);
    sum_y += static_cast<double>(c.y);
  }
  rep.mean_x = sum_x / static_cast<double>(trials);
  rep.mean_y = sum_y / static_cast<double>(trials);
  rep.fit_x = binomial_fit(xs, rep.n_blocks, rep.p);
  rep.fit_y = binomial_fit(ys, rep.l * rep.k * rep.n_blocks,
                           rep.p / static_cast<double>(rep.k));
  return rep;
}

MarginalReport marginal_identity_check(std::uint32_t n, std::uint32_t r,
                                       double eps, std::uint64_t trials,
                                       Seed seed) {
  if (n > 8)
    throw std::invalid_argument(
        "marginal check: per-edge tables need n <= 8");
  CouplingParams params;
  params.n = n;
  params.r = r;
  params.eps = eps;
  params.rho = 1;
  const SplitProbabilities prob = split_probabilities(params);

  MarginalReport rep;
  rep.trials = trials;
  rep.p2 = prob.p2;
  const std::uint64_t total = binom(n, r);
  std::vector<std::uint64_t> present_count(total, 0);
  std::vector<bool> present(total);
  // Indicators at a fixed reference edge {0,..,r-1} (rank 0): membership in
  // the type-1 union vs membership in promoted+retained.
  double sum1 = 0.0, sum2 = 0.0, sum12 = 0.0;

  for (std::uint64_t t = 0; t < trials; ++t) {
    EdgeTypeSplit split = build_split(params, seed.with_stream(seed.stream + t));
    VertexClassification classification = classify_vertices(split);
    PromotedRetained pr =
        split_type23(split, weak_flags(n, classification));
    std::fill(present.begin(), present.end(), false);
    for (const OrientedEdge& e : pr.promoted) {
      Edge u = e.unoriented();
      present[subset_rank(u)] = true;
    }
    for (const OrientedEdge& e : pr.retained) {
      Edge u = e.unoriented();
      present[subset_rank(u)] = true;
    }
    for (std::uint64_t rank = 0; rank < total; ++rank)
      if (present[rank]) ++present_count[rank];

    bool in_type1 = false;
    for (const OrientedHypergraph& layer : split.type1_layers) {
      for (const OrientedEdge& e : layer.edges()) {
        if (subset_rank(e.unoriented()) == 0) {
          in_type1 = true;
          break;
        }
      }
      if (in_type1) break;
    }
    const bool in_union = present[0];
    sum1 += in_type1 ? 1.0 : 0.0;
    sum2 += in_union ? 1.0 : 0.0;
    sum12 += (in_type1 && in_union) ? 1.0 : 0.0;
  }

  rep.edge_frequency.resize(total);
  for (std::uint64_t rank = 0; rank < total; ++rank)
    rep.edge_frequency[rank] =
        trials == 0 ? 0.0
                    : static_cast<double>(present_count[rank]) /
                          static_cast<double>(trials);
  rep.sigma = trials == 0
                  ? 0.0
                  : std::sqrt(rep.p2 * (1.0 - rep.p2) /
                              static_cast<double>(trials));
  rep.max_abs_z = 0.0;
  for (double freq : rep.edge_frequency) {
    const double dev = std::abs(freq - rep.p2);
    const double z = rep.sigma > 0.0 ? dev / rep.sigma : (dev > 0.0 ? 1e9 : 0.0);
    rep.max_abs_z = std::max(rep.max_abs_z, z);
  }
  rep.frequencies_ok = rep.max_abs_z <= 3.0;

  if (trials > 0) {
    const double inv = 1.0 / static_cast<double>(trials);
    const double mean1 = sum1 * inv;
    const double mean2 = sum2 * inv;
    rep.covariance = sum12 * inv - mean1 * mean2;
    const double var1 = mean1 * (1.0 - mean1);
    const double var2 = mean2 * (1.0 - mean2);
    const double scale = std::sqrt(var1 * var2 * inv);
    rep.covariance_z = scale > 0.0 ? rep.covariance / scale : 0.0;
  }
  rep.independence_ok = std::abs(rep.covariance_z) <= 3.0;
  return rep;
}

}  // namespace rhg
