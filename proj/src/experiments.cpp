#include "rhg/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rhg/bounds.hpp"
#include "rhg/coupling.hpp"
#include "rhg/reduction.hpp"
#include "rhg/sampling.hpp"
#include "rhg/util.hpp"

namespace rhg {

using nlohmann::json;

void validate(const ExperimentConfig& config) {
  if (config.grid.empty())
    throw std::invalid_argument("experiment: the grid must be nonempty");
  if (config.trials == 0)
    throw std::invalid_argument("experiment: trials must be >= 1");
  if (config.r < 2 || config.n < config.r)
    throw std::invalid_argument("experiment: need n >= r >= 2");
  for (double c : config.grid)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("experiment: grid ratios must be finite and >= 0");
  if (!(config.significance > 0.0 && config.significance < 1.0))
    throw std::invalid_argument("experiment: significance must lie in (0,1)");
}

std::uint64_t grid_edge_count(std::uint32_t n, std::uint32_t r, double ratio) {
  const std::uint64_t total = binom(n, r);
  const double scale = static_cast<double>(n) * std::log(static_cast<double>(n)) /
                       static_cast<double>(r);
  const long long m = std::llround(ratio * scale);
  if (m <= 0) return 0;
  if (static_cast<std::uint64_t>(m) >= total) return total;
  return static_cast<std::uint64_t>(m);
}

// --- threshold sweep -------------------------------------------------------

ExperimentResult threshold_sweep(const ExperimentConfig& config) {
  validate(config);
  const std::uint32_t n = config.n;
  const std::uint32_t r = config.r;
  const std::uint64_t total = binom(n, r);

  ExperimentResult result;
  result.config = config;
  result.points.resize(config.grid.size());

  struct Spec {
    std::uint64_t m;
    std::size_t out;
  };
  std::vector<Spec> specs;
  for (std::size_t i = 0; i < config.grid.size(); ++i) {
    result.points[i].ratio = config.grid[i];
    result.points[i].edges = grid_edge_count(n, r, config.grid[i]);
    result.points[i].records.resize(config.trials);
    specs.push_back({result.points[i].edges, i});
  }
  std::stable_sort(specs.begin(), specs.end(),
                   [](const Spec& a, const Spec& b) { return a.m < b.m; });

  auto run_trial = [&](std::uint64_t t) {
    const Seed ts = config.seed.with_stream(config.seed.stream + t);
    Rng rng(ts);
    std::vector<std::uint64_t> ranks(total);
    std::iota(ranks.begin(), ranks.end(), 0);
    rng.shuffle(ranks);

    std::vector<Edge> edges;
    std::uint64_t have = 0;
    bool found_below = false;  // a smaller prefix already contained a cycle
    for (const Spec& spec : specs) {
      while (have < spec.m) {
        edges.push_back(subset_unrank(ranks[have], r));
        ++have;
      }
      Hypergraph h(n, r, edges);
      const bool isolated = h.min_degree() == 0;
      const auto t0 = std::chrono::steady_clock::now();
      CycleSearch search =
          find_loose_hamilton(h, CycleSearchOptions{config.budget, 0, false});
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      if (search.status == SearchStatus::found) {
        if (validate_loose_cycle(h, *search.cycle) != CycleError::none)
          throw std::logic_error("sweep: solver returned an invalid cycle");
        found_below = true;
      } else if (search.status == SearchStatus::not_found && found_below) {
        // the prefixes are nested, so existence is monotone in m
        throw std::logic_error(
            "sweep: existence not monotone across nested prefixes");
      }
      result.points[spec.out].records[t] =
          TrialRecord{ts, search.status, search.nodes, isolated, wall};
    }
  };

  const std::uint32_t workers = std::max<std::uint32_t>(1, config.threads);
  if (workers == 1 || config.trials == 1) {
    for (std::uint64_t t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t t = next.fetch_add(1);
          if (t >= config.trials) return;
          try {
            run_trial(t);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  const double z = probit(1.0 - config.significance / 2.0);
  for (GridPointResult& pt : result.points) {
    for (const TrialRecord& rec : pt.records) {
      switch (rec.outcome) {
        case SearchStatus::found: ++pt.found; break;
        case SearchStatus::not_found: ++pt.not_found; break;
        case SearchStatus::budget_exceeded: ++pt.budget_exceeded; break;
      }
      if (rec.isolated_vertex) ++pt.isolated;
    }
    pt.rate = static_cast<double>(pt.found) / static_cast<double>(config.trials);
    pt.confidence = wilson_interval(pt.found, config.trials, z);
  }
  return result;
}

// --- serialization ----------------------------------------------------------

namespace {

// shortest decimal form that parses back to the same double
std::string fmt(double x) { return json(x).dump(); }

SearchStatus status_from_string(const std::string& s) {
  if (s == "found") return SearchStatus::found;
  if (s == "not_found") return SearchStatus::not_found;
  if (s == "budget_exceeded") return SearchStatus::budget_exceeded;
  throw std::invalid_argument("unknown search status: " + s);
}

json config_to_json(const ExperimentConfig& c) {
  return json{{"n", c.n},
              {"r", c.r},
              {"grid", c.grid},
              {"trials", c.trials},
              {"seed", c.seed.value},
              {"stream", c.seed.stream},
              {"budget", c.budget},
              {"threads", c.threads},
              {"significance", c.significance}};
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.n = j.at("n").get<std::uint32_t>();
  c.r = j.at("r").get<std::uint32_t>();
  c.grid = j.at("grid").get<std::vector<double>>();
  c.trials = j.at("trials").get<std::uint64_t>();
  c.seed = Seed{j.at("seed").get<std::uint64_t>(),
                j.at("stream").get<std::uint64_t>()};
  c.budget = j.at("budget").get<std::uint64_t>();
  c.threads = j.at("threads").get<std::uint32_t>();
  c.significance = j.at("significance").get<double>();
  return c;
}

}  // namespace

std::string sweep_csv(const ExperimentResult& result) {
  const ExperimentConfig& c = result.config;
  std::ostringstream out;
  out << "# threshold-sweep\n";
  out << "# n=" << c.n << " r=" << c.r << " trials=" << c.trials
      << " seed=" << c.seed.value << " stream=" << c.seed.stream
      << " budget=" << c.budget << " threads=" << c.threads
      << " significance=" << fmt(c.significance) << "\n";
  out << "# grid=";
  for (std::size_t i = 0; i < c.grid.size(); ++i)
    out << (i ? "," : "") << fmt(c.grid[i]);
  out << "\n";
  out << "point,ratio,edges,trial,seed,stream,outcome,nodes,isolated\n";
  for (std::size_t p = 0; p < result.points.size(); ++p) {
    const GridPointResult& pt = result.points[p];
    for (std::size_t t = 0; t < pt.records.size(); ++t) {
      const TrialRecord& rec = pt.records[t];
      out << p << ',' << fmt(pt.ratio) << ',' << pt.edges << ',' << t << ','
          << rec.seed.value << ',' << rec.seed.stream << ','
          << to_string(rec.outcome) << ',' << rec.nodes << ','
          << (rec.isolated_vertex ? 1 : 0) << "\n";
    }
  }
  return out.str();
}

std::string result_json(const ExperimentResult& result) {
  json points = json::array();
  for (const GridPointResult& pt : result.points) {
    json records = json::array();
    for (const TrialRecord& rec : pt.records) {
      records.push_back(json{{"seed", rec.seed.value},
                             {"stream", rec.seed.stream},
                             {"outcome", to_string(rec.outcome)},
                             {"nodes", rec.nodes},
                             {"isolated", rec.isolated_vertex}});
    }
    points.push_back(json{{"ratio", pt.ratio},
                          {"edges", pt.edges},
                          {"found", pt.found},
                          {"not_found", pt.not_found},
                          {"budget_exceeded", pt.budget_exceeded},
                          {"isolated", pt.isolated},
                          {"rate", pt.rate},
                          {"confidence",
                           json{{"low", pt.confidence.low},
                                {"high", pt.confidence.high}}},
                          {"records", std::move(records)}});
  }
  json j{{"experiment", "threshold-sweep"},
         {"config", config_to_json(result.config)},
         {"points", std::move(points)}};
  return j.dump(2) + "\n";
}

ExperimentResult result_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentResult result;
  result.config = config_from_json(j.at("config"));
  for (const json& pj : j.at("points")) {
    GridPointResult pt;
    pt.ratio = pj.at("ratio").get<double>();
    pt.edges = pj.at("edges").get<std::uint64_t>();
    pt.found = pj.at("found").get<std::uint64_t>();
    pt.not_found = pj.at("not_found").get<std::uint64_t>();
    pt.budget_exceeded = pj.at("budget_exceeded").get<std::uint64_t>();
    pt.isolated = pj.at("isolated").get<std::uint64_t>();
    pt.rate = pj.at("rate").get<double>();
    pt.confidence.low = pj.at("confidence").at("low").get<double>();
    pt.confidence.high = pj.at("confidence").at("high").get<double>();
    for (const json& rj : pj.at("records")) {
      TrialRecord rec;
      rec.seed = Seed{rj.at("seed").get<std::uint64_t>(),
                      rj.at("stream").get<std::uint64_t>()};
      rec.outcome = status_from_string(rj.at("outcome").get<std::string>());
      rec.nodes = rj.at("nodes").get<std::uint64_t>();
      rec.isolated_vertex = rj.at("isolated").get<bool>();
      pt.records.push_back(rec);
    }
    result.points.push_back(std::move(pt));
  }
  return result;
}

// --- matchings-to-cycle pipeline ---------------------------------------------

PipelineReport matching_pipeline(std::uint32_t n, std::uint32_t r, double eps,
                                 Seed seed, std::uint64_t budget) {
  if (r < 2 || n < r)
    throw std::invalid_argument("pipeline: need n >= r >= 2");
  if (n % (static_cast<std::uint64_t>(r) * (r - 1)) != 0)
    throw std::invalid_argument("pipeline: r*(r-1) must divide n");
  if (!(eps > 0.0))
    throw std::invalid_argument("pipeline: eps must be positive");

  PipelineReport report;
  report.n = n;
  report.r = r;
  report.eps = eps;
  report.seed = seed;
  report.budget = budget;
  report.rho = degree_threshold(r).min_degree;

  CouplingParams params;
  params.n = n;
  params.r = r;
  params.eps = eps;
  params.rho = report.rho;
  CouplingTranscript transcript = run_coupling(params, seed);
  report.picks = transcript.split.prob.min_out_degree;
  report.coupling_embedded = transcript.success;
  if (!transcript.success) report.coupling_note = to_string(transcript.failure);

  const double m_star = static_cast<double>(n) *
                        std::log(static_cast<double>(n)) /
                        static_cast<double>(r);
  report.extra_edges = static_cast<std::uint64_t>(std::llround(
      eps * m_star / static_cast<double>(report.rho)));
  report.extra_edges = std::min(report.extra_edges, binom(n, r));

  std::set<Edge> union_set;
  for (std::uint32_t i = 0; i < report.rho; ++i) {
    std::vector<Edge> edges = transcript.layers[i].unoriented().edges();
    ModelParams pad_params;
    pad_params.n = n;
    pad_params.r = r;
    pad_params.m = report.extra_edges;
    Hypergraph pad = sample_fixed_size(
        pad_params, seed.with_stream(seed.stream + 2 + i));
    edges.insert(edges.end(), pad.edges().begin(), pad.edges().end());
    Hypergraph layer(n, r, std::move(edges));

    MatchingSearch search = find_perfect_matching(layer, budget);
    report.stages.push_back(PipelineStage{
        "matching-" + std::to_string(i + 1), search.status, search.nodes});
    if (search.status == SearchStatus::found) {
      if (validate_perfect_matching(layer, *search.matching) !=
          MatchingError::none)
        throw std::logic_error("pipeline: solver returned an invalid matching");
      std::vector<Edge> picked;
      for (EdgeIndex e : search.matching->edges) {
        picked.push_back(layer.edge(e));
        union_set.insert(layer.edge(e));
      }
      report.matchings.push_back(std::move(picked));
    }
  }

  report.union_edges.assign(union_set.begin(), union_set.end());
  Hypergraph union_graph(n, r, report.union_edges);
  CycleSearch cycle =
      find_loose_hamilton(union_graph, CycleSearchOptions{budget, 0, false});
  report.stages.push_back(
      PipelineStage{"loose-cycle", cycle.status, cycle.nodes});
  if (cycle.status == SearchStatus::found) {
    if (validate_loose_cycle(union_graph, *cycle.cycle) != CycleError::none)
      throw std::logic_error("pipeline: solver returned an invalid cycle");
    report.cycle = cycle.cycle;
  }

  report.success = true;
  for (const PipelineStage& stage : report.stages) {
    if (stage.status != SearchStatus::found) {
      report.success = false;
      if (report.failed_stage.empty()) report.failed_stage = stage.name;
    }
  }
  return report;
}

std::string pipeline_json(const PipelineReport& report) {
  json stages = json::array();
  for (const PipelineStage& s : report.stages)
    stages.push_back(json{
        {"name", s.name}, {"status", to_string(s.status)}, {"nodes", s.nodes}});
  json matchings = json::array();
  for (const auto& m : report.matchings) matchings.push_back(m);
  json j{{"experiment", "matching-pipeline"},
         {"n", report.n},
         {"r", report.r},
         {"eps", report.eps},
         {"seed", report.seed.value},
         {"stream", report.seed.stream},
         {"budget", report.budget},
         {"rho", report.rho},
         {"picks", report.picks},
         {"extra_edges", report.extra_edges},
         {"coupling_embedded", report.coupling_embedded},
         {"coupling_note", report.coupling_note},
         {"stages", std::move(stages)},
         {"matchings", std::move(matchings)},
         {"union_edges", report.union_edges},
         {"failed_stage", report.failed_stage},
         {"success", report.success}};
  if (report.cycle) {
    j["cycle"] = json{{"order", report.cycle->order},
                      {"edges", report.cycle->edges}};
  } else {
    j["cycle"] = nullptr;
  }
  return j.dump(2) + "\n";
}

// --- statistical suite --------------------------------------------------------

namespace {

double z_to_p(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

double bonferroni(double p, double tests) { return std::min(1.0, p * tests); }

// pass is pre-set to the claim's exact side conditions; the final threshold
// comparison happens in statistical_suite once the claim count is known.
ClaimResult make_claim(std::string name, std::string description,
                       std::uint64_t trials, double statistic, double p_value,
                       std::string detail = std::string(), bool side_ok = true) {
  ClaimResult c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.trials = trials;
  c.statistic = statistic;
  c.p_value = p_value;
  c.pass = side_ok;
  c.detail = std::move(detail);
  return c;
}

// frequency claim over per-cell Bernoulli counts with a common success
// probability: the statistic is the extreme standardized deviation, the
// p-value Bonferroni-corrected over cells.
ClaimResult frequency_claim(std::string name, std::string description,
                            const std::vector<std::uint64_t>& counts,
                            std::uint64_t trials, double p) {
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  double max_z = 0.0;
  for (std::uint64_t c : counts) {
    const double freq = static_cast<double>(c) / static_cast<double>(trials);
    max_z = std::max(max_z, std::fabs(freq - p) / sigma);
  }
  const double pv =
      bonferroni(z_to_p(max_z), static_cast<double>(counts.size()));
  return make_claim(std::move(name), std::move(description), trials, max_z, pv);
}

Edge lowest_edge(std::uint32_t r) {
  Edge e(r);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

bool oriented_contains(const OrientedHypergraph& g, const Edge& sorted_edge) {
  for (const OrientedEdge& e : g.edges())
    if (e.unoriented() == sorted_edge) return true;
  return false;
}

}  // namespace

SuiteReport statistical_suite(const ExperimentConfig& config) {
  SuiteReport report;
  report.config = config;
  if (config.trials == 0) {
    report.all_pass = true;
    return report;
  }

  const std::uint64_t base = config.trials;
  const std::uint64_t value = config.seed.value;
  auto block = [&](std::uint64_t claim) {
    return config.seed.stream + 1'000'000ULL * (claim + 1);
  };
  std::vector<ClaimResult>& claims = report.claims;

  {  // uniform m-edge model: per-edge inclusion frequency m/C(n,r)
    const std::uint64_t s0 = block(0);
    ModelParams mp;
    mp.n = 5;
    mp.r = 3;
    mp.m = 4;
    std::vector<std::uint64_t> counts(10, 0);
    for (std::uint64_t t = 0; t < base; ++t) {
      Hypergraph h = sample_fixed_size(mp, Seed{value, s0 + t});
      for (const Edge& e : h.edges()) ++counts[subset_rank(e)];
    }
    claims.push_back(frequency_claim(
        "fixed-size-edge-inclusion",
        "uniform 4-edge model on n=5, r=3: every edge appears with frequency 4/10",
        counts, base, 0.4));
  }

  {  // binomial model: edge count is Bin(C(n,r), p)
    const std::uint64_t s0 = block(1);
    ModelParams mp;
    mp.n = 5;
    mp.r = 3;
    mp.p = 0.3;
    std::vector<std::uint64_t> observed(11, 0);
    for (std::uint64_t t = 0; t < base; ++t)
      ++observed[sample_binomial(mp, Seed{value, s0 + t}).m()];
    std::vector<double> expected;
    for (double q : binomial_pmf_table(10, 0.3))
      expected.push_back(q * static_cast<double>(base));
    const ChiSquare fit = chi_square_gof(observed, expected);
    claims.push_back(make_claim(
        "binomial-edge-count",
        "binomial model on n=5, r=3, p=0.3: edge count follows Bin(10, 0.3)",
        base, fit.statistic, fit.p_value));
  }

  {  // oriented binomial: unoriented projection has density 1-(1-p)^r
    const std::uint64_t s0 = block(2);
    ModelParams mp;
    mp.n = 5;
    mp.r = 3;
    mp.p = 0.1;
    const double proj = 1.0 - std::pow(0.9, 3);
    std::vector<std::uint64_t> counts(10, 0);
    for (std::uint64_t t = 0; t < base; ++t) {
      OrientedHypergraph g = sample_oriented_binomial(mp, Seed{value, s0 + t});
      std::vector<bool> present(10, false);
      for (const OrientedEdge& e : g.edges())
        present[subset_rank(e.unoriented())] = true;
      for (std::size_t i = 0; i < 10; ++i)
        if (present[i]) ++counts[i];
    }
    claims.push_back(frequency_claim(
        "oriented-projection-rate",
        "oriented binomial on n=5, r=3, p=0.1: each unoriented edge present "
        "with frequency 1-(1-p)^3",
        counts, base, proj));
  }

  {  // out model: a fixed pick of a fixed vertex is uniform over candidates
    const std::uint64_t s0 = block(3);
    ModelParams mp;
    mp.n = 5;
    mp.r = 3;
    mp.d = 2;
    std::vector<std::uint64_t> observed(6, 0);
    for (std::uint64_t t = 0; t < base; ++t) {
      OrientedHypergraph g = sample_out_model(mp, Seed{value, s0 + t});
      const OrientedEdge& first = g.edge(g.out_edges(0)[0]);
      Edge mapped;  // heads of vertex 0, shifted into {0..3}
      for (Vertex h : first.heads) mapped.push_back(h - 1);
      ++observed[subset_rank(mapped)];
    }
    const std::vector<double> expected(6, static_cast<double>(base) / 6.0);
    const ChiSquare fit = chi_square_gof(observed, expected);
    claims.push_back(make_claim(
        "out-model-pick-uniformity",
        "out model on n=5, r=3, d=2: the first pick of vertex 0 is uniform "
        "over its 6 candidate edges",
        base, fit.statistic, fit.p_value));
  }

  {  // matching union: a single uniform matching of K(4,2) is uniform over 3
    const std::uint64_t s0 = block(4);
    ModelParams mp;
    mp.n = 4;
    mp.r = 2;
    mp.rho = 1;
    std::vector<std::uint64_t> observed(3, 0);
    for (std::uint64_t t = 0; t < base; ++t) {
      Hypergraph h = sample_matching_union(mp, Seed{value, s0 + t});
      for (const Edge& e : h.edges())
        if (e[0] == 0) ++observed[e[1] - 1];
    }
    const std::vector<double> expected(3, static_cast<double>(base) / 3.0);
    const ChiSquare fit = chi_square_gof(observed, expected);
    claims.push_back(make_claim(
        "matching-union-uniformity",
        "single-matching union on n=4, r=2: each of the 3 perfect matchings "
        "of the complete graph is drawn with frequency 1/3",
        base, fit.statistic, fit.p_value));
  }

  {  // disjoint streams: edge indicators across streams are uncorrelated
    const std::uint64_t s0 = block(5);
    ModelParams mp;
    mp.n = 5;
    mp.r = 3;
    mp.p = 0.5;
    const Edge probe = lowest_edge(3);
    std::uint64_t cx = 0, cy = 0, cxy = 0;
    for (std::uint64_t t = 0; t < base; ++t) {
      const bool x =
          sample_binomial(mp, Seed{value, s0 + 2 * t}).has_edge(probe);
      const bool y =
          sample_binomial(mp, Seed{value, s0 + 2 * t + 1}).has_edge(probe);
      cx += x;
      cy += y;
      cxy += x && y;
    }
    const double n_d = static_cast<double>(base);
    const double mx = cx / n_d, my = cy / n_d;
    const double cov = cxy / n_d - mx * my;
    const double var = mx * (1 - mx) * my * (1 - my);
    const double zc = var > 0 ? cov / std::sqrt(var / n_d) : 0.0;
    claims.push_back(make_claim(
        "stream-independence",
        "binomial samples on distinct streams: presence indicators of a fixed "
        "edge are uncorrelated",
        base, std::fabs(zc), z_to_p(zc)));
  }

  {  // binomial model given its edge count is the uniform fixed-size model
    const std::uint64_t s0 = block(6);
    ModelParams mp;
    mp.n = 4;
    mp.r = 3;
    mp.p = 0.4;
    std::vector<std::uint64_t> observed(6, 0);
    std::uint64_t conditioned = 0;
    for (std::uint64_t t = 0; t < base; ++t) {
      Hypergraph h = sample_binomial(mp, Seed{value, s0 + t});
      if (h.m() != 2) continue;
      ++conditioned;
      std::vector<std::uint32_t> pair;
      for (const Edge& e : h.edges())
        pair.push_back(static_cast<std::uint32_t>(subset_rank(e)));
      std::sort(pair.begin(), pair.end());
      ++observed[subset_rank(pair)];
    }
    const std::vector<double> expected(
        6, static_cast<double>(conditioned) / 6.0);
    const ChiSquare fit = chi_square_gof(observed, expected);
    claims.push_back(make_claim(
        "binomial-conditional-uniformity",
        "binomial model on n=4, r=3, p=0.4 conditioned on 2 edges: the edge "
        "pair is uniform over all 6 pairs",
        base, fit.statistic, fit.p_value,
        "conditioned trials: " + std::to_string(conditioned)));
  }

  {  // oriented projection in distribution: edge count matches Bin(N, p')
    const std::uint64_t s0 = block(7);
    ModelParams mp;
    mp.n = 4;
    mp.r = 3;
    mp.p = 0.2;
    const double proj = 1.0 - std::pow(0.8, 3);
    std::vector<std::uint64_t> observed(5, 0);
    for (std::uint64_t t = 0; t < base; ++t) {
      OrientedHypergraph g = sample_oriented_binomial(mp, Seed{value, s0 + t});
      std::set<std::uint64_t> ranks;
      for (const OrientedEdge& e : g.edges())
        ranks.insert(subset_rank(e.unoriented()));
      ++observed[ranks.size()];
    }
    std::vector<double> expected;
    for (double q : binomial_pmf_table(4, proj))
      expected.push_back(q * static_cast<double>(base));
    const ChiSquare fit = chi_square_gof(observed, expected);
    claims.push_back(make_claim(
        "oriented-projection-distribution",
        "oriented binomial on n=4, r=3, p=0.2: the distinct-edge count of the "
        "projection follows Bin(4, 1-(1-p)^3)",
        base, fit.statistic, fit.p_value));
  }

  {  // dominance coupling: X <= Y pathwise and both marginals exact
    Rng rng(Seed{value, block(8)});
    std::vector<std::uint64_t> xs, ys;
    std::uint64_t violations = 0;
    for (std::uint64_t t = 0; t < base; ++t) {
      BinomialCouple c = couple_binomials(50, 0.3, 4, 2, rng);
      xs.push_back(c.x);
      ys.push_back(c.y);
      if (c.x > c.y) ++violations;
    }
    const ChiSquare fx = binomial_fit(xs, 50, 0.3);
    const ChiSquare fy = binomial_fit(ys, 400, 0.075);
    claims.push_back(make_claim(
        "binomial-dominance",
        "coupled pair at N=50, P=0.3, K=4, L=2: X <= Y on every sample, X "
        "follows Bin(N,P) and Y follows Bin(NLK, P/K)",
        base, std::max(fx.statistic, fy.statistic),
        bonferroni(std::min(fx.p_value, fy.p_value), 2),
        "violations=" + std::to_string(violations), violations == 0));
  }

  {  // dominance coupling means at a second parameter point
    Rng rng(Seed{value, block(9)});
    double sx = 0.0, sy = 0.0;
    for (std::uint64_t t = 0; t < base; ++t) {
      BinomialCouple c = couple_binomials(10, 0.5, 1, 3, rng);
      sx += static_cast<double>(c.x);
      sy += static_cast<double>(c.y);
    }
    const double n_d = static_cast<double>(base);
    const double zx = (sx / n_d - 5.0) / std::sqrt(2.5 / n_d);
    const double zy = (sy / n_d - 15.0) / std::sqrt(7.5 / n_d);
    const double zmax = std::max(std::fabs(zx), std::fabs(zy));
    claims.push_back(make_claim(
        "binomial-couple-means",
        "coupled pair at N=10, P=0.5, K=1, L=3: sample means match N*P and "
        "N*L*P",
        base, zmax, bonferroni(z_to_p(zmax), 2)));
  }

  {  // promoted+retained edges form an independent binomial layer
    const MarginalReport mr =
        marginal_identity_check(6, 3, 0.5, base, Seed{value, block(10)});
    const double stat = std::max(mr.max_abs_z, std::fabs(mr.covariance_z));
    const double pv = bonferroni(
        std::min(z_to_p(mr.max_abs_z), z_to_p(mr.covariance_z)),
        static_cast<double>(mr.edge_frequency.size()) + 1.0);
    claims.push_back(make_claim(
        "split-marginal-identity",
        "layered split on n=6, r=3: promoted plus retained edges have per-edge "
        "density p2, independent of the first layer",
        mr.trials, stat, pv));
  }

  {  // type-1 shadow plus promoted+retained stays below the target density
    const std::uint64_t s0 = block(11);
    CouplingParams params;
    params.n = 6;
    params.r = 3;
    params.eps = 0.5;
    const SplitProbabilities prob = split_probabilities(params);
    const double p_union =
        1.0 - (1.0 - prob.p1_shadow) * (1.0 - prob.p2);
    const Edge probe = lowest_edge(3);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < base; ++t) {
      // each run burns two streams (split + relabeling draws)
      CouplingTranscript tr = run_coupling(params, Seed{value, s0 + 2 * t});
      bool present = false;
      for (const OrientedHypergraph& layer : tr.split.type1_layers)
        present = present || oriented_contains(layer, probe);
      for (const OrientedEdge& e : tr.promoted)
        present = present || e.unoriented() == probe;
      for (const OrientedEdge& e : tr.retained)
        present = present || e.unoriented() == probe;
      if (present) ++hits;
    }
    const double n_d = static_cast<double>(base);
    const double sigma = std::sqrt(p_union * (1.0 - p_union) / n_d);
    const double zc = (hits / n_d - p_union) / sigma;
    const bool algebra = p_union <= prob.p + 1e-15;
    claims.push_back(make_claim(
        "split-union-density",
        "layered split on n=6, r=3: a fixed edge lands in the union of the "
        "first layer's shadow and the promoted+retained set with probability "
        "p1_shadow + p2 - p1_shadow*p2 <= p",
        base, std::fabs(zc), z_to_p(zc),
        "union density " + fmt(p_union) + " vs p " + fmt(prob.p), algebra));
  }

  {  // distinct type-1 layers are independent
    const std::uint64_t s0 = block(12);
    CouplingParams params;
    params.n = 6;
    params.r = 3;
    params.eps = 0.5;
    params.rho = 2;
    const Edge probe = lowest_edge(3);
    std::uint64_t cx = 0, cy = 0, cxy = 0;
    const std::uint64_t trials = std::max<std::uint64_t>(1, base / 2);
    for (std::uint64_t t = 0; t < trials; ++t) {
      EdgeTypeSplit split = build_split(params, Seed{value, s0 + t});
      const bool x = oriented_contains(split.type1_layers[0], probe);
      const bool y = oriented_contains(split.type1_layers[1], probe);
      cx += x;
      cy += y;
      cxy += x && y;
    }
    const double n_d = static_cast<double>(trials);
    const double mx = cx / n_d, my = cy / n_d;
    const double cov = cxy / n_d - mx * my;
    const double var = mx * (1 - mx) * my * (1 - my);
    const double zc = var > 0 ? cov / std::sqrt(var / n_d) : 0.0;
    claims.push_back(make_claim(
        "layer-independence",
        "layered split with two layers on n=6, r=3: presence of a fixed edge "
        "in one layer is independent of the other",
        trials, std::fabs(zc), z_to_p(zc)));
  }

  {  // embedding picks: contained in the split and uniform over candidates
    const std::uint64_t s0 = block(13);
    CouplingParams params;
    params.n = 6;
    params.r = 3;
    params.eps = 0.5;
    params.rho = 1;
    const std::uint64_t trials = std::min<std::uint64_t>(base, 10'000);
    const std::uint64_t cells = binom(5, 2);
    std::vector<std::uint64_t> observed(cells, 0);
    std::uint64_t successes = 0;
    bool contained = true;
    for (std::uint64_t t = 0; t < trials; ++t) {
      CouplingTranscript tr = run_coupling(params, Seed{value, s0 + 2 * t});
      if (!tr.success) continue;
      ++successes;
      std::set<std::uint64_t> allowed;
      for (const OrientedHypergraph& layer : tr.split.type1_layers)
        for (const OrientedEdge& e : layer.edges())
          allowed.insert(subset_rank(e.unoriented()));
      for (const OrientedEdge& e : tr.promoted)
        allowed.insert(subset_rank(e.unoriented()));
      for (const OrientedEdge& e : tr.retained)
        allowed.insert(subset_rank(e.unoriented()));
      for (const OrientedHypergraph& layer : tr.layers) {
        for (const OrientedEdge& e : layer.edges()) {
          contained =
              contained && allowed.count(subset_rank(e.unoriented())) > 0;
          Edge mapped;  // heads shifted around the tail into {0..n-2}
          for (Vertex h : e.heads)
            mapped.push_back(h < e.tail ? h : h - 1);
          ++observed[subset_rank(mapped)];
        }
      }
    }
    std::uint64_t picks = 0;
    for (std::uint64_t c : observed) picks += c;
    double stat = 0.0, pv = 1.0;
    std::string detail = "successes=" + std::to_string(successes) +
                         " picks=" + std::to_string(picks);
    if (picks > 0) {
      const std::vector<double> expected(
          cells, static_cast<double>(picks) / static_cast<double>(cells));
      const ChiSquare fit = chi_square_gof(observed, expected);
      stat = fit.statistic;
      pv = fit.p_value;
    } else {
      detail += " (no successful embeddings at this sample size)";
    }
    claims.push_back(make_claim(
        "embedding-pick-uniformity",
        "successful embeddings on n=6, r=3: extracted picks stay inside the "
        "split layers and are uniform over each vertex's candidate edges",
        trials, stat, pv, detail, contained));
  }

  {  // contraction keeps one-overlap edges with the exact acceptance ratio
    const std::uint64_t s0 = block(14);
    const Hypergraph host = Hypergraph::complete(8, 3);
    const Edge anchor = lowest_edge(3);
    const double p2 = 0.3;
    const double q = acceptance_ratio(p2, 3);
    const std::uint64_t trials = std::min<std::uint64_t>(base, 20'000);
    std::uint64_t accepted = 0, considered = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Contraction c = contract(host, anchor, p2, Seed{value, s0 + t});
      for (const CandidateDecision& d : c.map.decisions) {
        ++considered;
        if (d.accepted) ++accepted;
      }
    }
    const double n_d = static_cast<double>(considered);
    const double zc = (accepted / n_d - q) / std::sqrt(q * (1 - q) / n_d);
    claims.push_back(make_claim(
        "contraction-acceptance-rate",
        "contracting an edge of the complete graph on n=8, r=3 at p2=0.3: "
        "one-overlap candidates are kept with probability (1-(1-p2)^(1/3))/p2",
        trials, std::fabs(zc), z_to_p(zc),
        "candidates=" + std::to_string(considered)));
  }

  {  // contracted-space edges are present with density exactly p2
    const std::uint64_t s0 = block(15);
    const double p2 = 0.3;
    const double survival = 1.0 - std::pow(1.0 - p2, 1.0 / 3.0);
    const Edge anchor = lowest_edge(3);
    const Edge image{2, 3, 5};     // contracted-space probe (merged id 5)
    const Edge preimage{0, 5, 6};  // one of its three one-overlap preimages
    ModelParams mp;
    mp.n = 8;
    mp.r = 3;
    mp.p = p2;
    const std::uint64_t trials = std::min<std::uint64_t>(base, 20'000);
    std::uint64_t image_hits = 0, preimage_hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Hypergraph h = sample_binomial(mp, Seed{value, s0 + 2 * t});
      Contraction c = contract(h, anchor, p2, Seed{value, s0 + 2 * t + 1});
      if (c.graph.has_edge(image)) ++image_hits;
      for (const CandidateDecision& d : c.map.decisions)
        if (d.accepted && h.edge(d.source) == preimage) ++preimage_hits;
    }
    const double n_d = static_cast<double>(trials);
    const double zi =
        (image_hits / n_d - p2) / std::sqrt(p2 * (1 - p2) / n_d);
    const double zp = (preimage_hits / n_d - survival) /
                      std::sqrt(survival * (1 - survival) / n_d);
    const double zmax = std::max(std::fabs(zi), std::fabs(zp));
    claims.push_back(make_claim(
        "contraction-image-presence",
        "contracting a binomial layer on n=8, r=3 at p2=0.3: each preimage "
        "survives with probability 1-(1-p2)^(1/3) and each contracted-space "
        "edge is present with probability exactly p2",
        trials, zmax, bonferroni(z_to_p(zmax), 2)));
  }

  {  // simulated codegree overflow probability stays under the union bound
    const std::uint64_t s0 = block(16);
    const std::uint32_t k = 6;
    const std::uint64_t m = 20;
    const double bound = codegree_union_bound(8, 3, m, k);
    ModelParams mp;
    mp.n = 8;
    mp.r = 3;
    mp.m = m;
    const std::uint64_t trials = std::min<std::uint64_t>(base, 10'000);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Hypergraph h = sample_fixed_size(mp, Seed{value, s0 + t});
      if (h.max_codegree() >= k) ++hits;
    }
    const double estimate =
        static_cast<double>(hits) / static_cast<double>(trials);
    double pv = 1.0;
    if (bound < 1.0)
      pv = static_cast<double>(
          binomial_upper_tail(trials, static_cast<long double>(bound), hits));
    claims.push_back(make_claim(
        "codegree-bound-simulation",
        "20-edge uniform model on n=8, r=3: the simulated probability of a "
        "vertex pair with codegree >= 6 stays below the union bound",
        trials, estimate, pv,
        "estimate=" + fmt(estimate) + " bound=" + fmt(bound),
        estimate <= bound));
  }

  report.threshold =
      config.significance / static_cast<double>(claims.size());
  report.all_pass = true;
  for (ClaimResult& c : claims) {
    c.pass = c.pass && c.p_value >= report.threshold;
    report.all_pass = report.all_pass && c.pass;
  }
  return report;
}

std::string suite_json(const SuiteReport& report) {
  json claims = json::array();
  for (const ClaimResult& c : report.claims)
    claims.push_back(json{{"name", c.name},
                          {"description", c.description},
                          {"trials", c.trials},
                          {"statistic", c.statistic},
                          {"p_value", c.p_value},
                          {"pass", c.pass},
                          {"detail", c.detail}});
  json j{{"experiment", "statistical-suite"},
         {"config", config_to_json(report.config)},
         {"threshold", report.threshold},
         {"claims", std::move(claims)},
         {"all_pass", report.all_pass}};
  return j.dump(2) + "\n";
}

SuiteReport suite_from_json(const std::string& text) {
  const json j = json::parse(text);
  SuiteReport report;
  report.config = config_from_json(j.at("config"));
  report.threshold = j.at("threshold").get<double>();
  report.all_pass = j.at("all_pass").get<bool>();
  for (const json& cj : j.at("claims")) {
    ClaimResult c;
    c.name = cj.at("name").get<std::string>();
    c.description = cj.at("description").get<std::string>();
    c.trials = cj.at("trials").get<std::uint64_t>();
    c.statistic = cj.at("statistic").get<double>();
    c.p_value = cj.at("p_value").get<double>();
    c.pass = cj.at("pass").get<bool>();
    c.detail = cj.at("detail").get<std::string>();
    report.claims.push_back(std::move(c));
  }
  return report;
}

}  // namespace rhg
