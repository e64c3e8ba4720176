#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <set>
#include <stdexcept>

#include "rhg/coupling.hpp"
#include "rhg/hypergraph.hpp"
#include "rhg/rng.hpp"
#include "rhg/util.hpp"

using namespace rhg;

namespace {

CouplingParams small_params() {
  CouplingParams params;
  params.n = 10;
  params.r = 3;
  params.eps = 0.5;
  return params;
}

bool edge_in_sources(const Edge& e, const CouplingTranscript& tr) {
  for (const OrientedHypergraph& layer : tr.split.type1_layers)
    for (EdgeIndex i = 0; i < layer.m(); ++i)
      if (layer.edge(i).unoriented() == e) return true;
  for (const OrientedEdge& oe : tr.promoted)
    if (oe.unoriented() == e) return true;
  for (const OrientedEdge& oe : tr.retained)
    if (oe.unoriented() == e) return true;
  return false;
}

}  // namespace

TEST_CASE("derived densities satisfy their defining relations") {
  for (double eps : {0.2, 0.5, 1.0}) {
    for (std::uint32_t rho : {1u, 2u, 3u}) {
      CouplingParams params;
      params.n = 50;
      params.r = 3;
      params.eps = eps;
      params.rho = rho;
      SplitProbabilities prob = split_probabilities(params);

      CHECK(prob.p == doctest::Approx((1 + eps) * prob.p_star).epsilon(1e-14));
      CHECK(std::pow(1 - prob.p1_layer, rho) ==
            doctest::Approx(1 - prob.p1).epsilon(1e-12));
      CHECK(std::pow(1 - prob.p3, 3) ==
            doctest::Approx(1 - prob.p2).epsilon(1e-12));
      CHECK(prob.p1_shadow ==
            doctest::Approx((eps / 2) * prob.p_star).epsilon(1e-12));
      CHECK(1 - std::pow(1 - prob.p1, 3) ==
            doctest::Approx(prob.p1_shadow).epsilon(1e-12));
      CHECK(prob.p1_shadow + prob.p2 == doctest::Approx(prob.p).epsilon(1e-14));
      CHECK(prob.p3_shadow == doctest::Approx(prob.p2).epsilon(1e-15));
    }
  }
}

TEST_CASE("density table matches frozen reference values") {
  SplitProbabilities prob = split_probabilities(small_params());
  // reference values computed with an independent arbitrary-precision script
  CHECK(prob.p_star == doctest::Approx(std::log(10.0) / 36).epsilon(1e-12));
  CHECK(prob.p_star == doctest::Approx(0.0639606970).epsilon(1e-8));
  CHECK(prob.p2 == doctest::Approx(0.0799508712).epsilon(1e-8));
  CHECK(prob.p3 == doctest::Approx(0.0273938617560646).epsilon(1e-12));
  CHECK(prob.min_out_degree == 1);  // ceil(0.25 * ln 10)
}

TEST_CASE("minimum out-degree grows with n and eps") {
  CouplingParams params;
  params.r = 3;
  params.n = 6;
  params.eps = 0.5;
  CHECK(split_probabilities(params).min_out_degree == 1);
  params.n = 100000;
  CHECK(split_probabilities(params).min_out_degree ==
        static_cast<std::uint32_t>(std::ceil(0.25 * std::log(100000.0))));
  params.eps = 1.0;
  CHECK(split_probabilities(params).min_out_degree ==
        static_cast<std::uint32_t>(std::ceil(std::log(100000.0))));
}

TEST_CASE("impossible density requests are rejected") {
  CouplingParams params;
  params.n = 4;
  params.r = 3;
  params.eps = 100.0;  // p = 101 * ln(4) / 3 >> 1
  CHECK_THROWS_AS((void)split_probabilities(params), std::domain_error);
}

TEST_CASE("the probability description names every density") {
  SplitProbabilities prob = split_probabilities(small_params());
  std::string text = describe(prob);
  for (const char* token : {"p*", "p1", "p2", "p3", "shadow", "picks"})
    CHECK(text.find(token) != std::string::npos);
}

TEST_CASE("a split samples rho layers plus the two secondary sources") {
  CouplingParams params = small_params();
  params.rho = 2;
  EdgeTypeSplit split = build_split(params, Seed{10, 0});
  CHECK(split.type1_layers.size() == 2);
  for (const OrientedHypergraph& layer : split.type1_layers) {
    CHECK(layer.n() == 10);
    CHECK(layer.r() == 3);
  }
  CHECK(split.type2.n() == 10);
  CHECK(split.type3.n() == 10);
  // reproducibility
  EdgeTypeSplit again = build_split(params, Seed{10, 0});
  CHECK(again.type2 == split.type2);
  CHECK(again.type3 == split.type3);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(again.type1_layers[i] == split.type1_layers[i]);
}

TEST_CASE("vertex classification separates strong from weak by out-degree") {
  // hand-built split: n=4, one layer, threshold one pick per vertex
  EdgeTypeSplit split;
  split.params.n = 4;
  split.params.r = 3;
  split.params.rho = 1;
  split.params.eps_prime = 0.1;
  split.prob.min_out_degree = 1;
  split.type1_layers.push_back(
      OrientedHypergraph(4, 3, {{0, {1, 2}}, {1, {2, 3}}}));
  VertexClassification cls = classify_vertices(split);
  CHECK(cls.out_degree[0] == std::vector<std::uint32_t>{1, 1, 0, 0});
  CHECK(cls.strong == std::vector<Vertex>{0, 1});
  CHECK(cls.weak == std::vector<Vertex>{2, 3});
  CHECK(cls.weak_fraction == doctest::Approx(0.5));
  CHECK(cls.weak_fraction_bound ==
        doctest::Approx(std::pow(4.0, -0.1)).epsilon(1e-12));
  CHECK(cls.within_bound);  // 0.5 <= 4^-0.1 ~ 0.871
}

TEST_CASE("strength requires the threshold in every layer") {
  EdgeTypeSplit split;
  split.params.n = 4;
  split.params.r = 3;
  split.params.rho = 2;
  split.prob.min_out_degree = 1;
  split.type1_layers.push_back(
      OrientedHypergraph(4, 3, {{0, {1, 2}}, {1, {2, 3}}}));
  split.type1_layers.push_back(OrientedHypergraph(4, 3, {{0, {2, 3}}}));
  VertexClassification cls = classify_vertices(split);
  CHECK(cls.strong == std::vector<Vertex>{0});  // vertex 1 misses layer 2
  CHECK(cls.weak == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("empty layers classify every vertex as weak") {
  EdgeTypeSplit split;
  split.params.n = 5;
  split.params.r = 3;
  split.params.rho = 1;
  split.prob.min_out_degree = 1;
  split.type1_layers.push_back(OrientedHypergraph(5, 3, {}));
  VertexClassification cls = classify_vertices(split);
  CHECK(cls.strong.empty());
  CHECK(cls.weak.size() == 5);
  CHECK(cls.weak_fraction == doctest::Approx(1.0));
  CHECK_FALSE(cls.within_bound);
}

TEST_CASE("the embedding runs end to end and reports a failure taxonomy") {
  CouplingParams params;
  params.n = 6;
  params.r = 3;
  params.eps = 0.5;
  int successes = 0;
  for (std::uint64_t s = 0; s < 400; s += 2) {
    CouplingTranscript tr = run_coupling(params, Seed{7321, s});
    REQUIRE(tr.layers.size() == params.rho);
    for (const OrientedHypergraph& layer : tr.layers) {
      CHECK(layer.m() == 6 * tr.split.prob.min_out_degree);
      for (Vertex v = 0; v < 6; ++v)
        CHECK(layer.out_degree(v) == tr.split.prob.min_out_degree);
    }
    if (tr.success) {
      ++successes;
      CHECK(tr.failure == CouplingFailure::none);
      // every extracted pick must come from the split's source edges
      for (const OrientedHypergraph& layer : tr.layers)
        for (EdgeIndex i = 0; i < layer.m(); ++i)
          CHECK(edge_in_sources(layer.edge(i).unoriented(), tr));
    } else {
      CHECK(tr.failure != CouplingFailure::none);
      CHECK_FALSE(to_string(tr.failure).empty());
    }
  }
  // successes exist but are rare at this tiny n
  CHECK(successes > 0);
}

TEST_CASE("promoted edges carry at most one weak vertex as tail") {
  CouplingParams params;
  params.n = 8;
  params.r = 3;
  params.eps = 0.5;
  for (std::uint64_t s = 0; s < 60; s += 2) {
    CouplingTranscript tr = run_coupling(params, Seed{515, s});
    std::set<Vertex> weak(tr.classification.weak.begin(),
                          tr.classification.weak.end());
    for (const OrientedEdge& e : tr.promoted) {
      int weak_members = 0;
      for (Vertex v : e.unoriented())
        if (weak.count(v)) ++weak_members;
      CHECK(weak_members <= 1);
      if (weak_members == 1) CHECK(weak.count(e.tail) == 1);
    }
    for (const OrientedEdge& e : tr.retained) {
      int weak_members = 0;
      for (Vertex v : e.unoriented())
        if (weak.count(v)) ++weak_members;
      CHECK(weak_members >= 2);
    }
    // promoted and retained partition the type-2/3 material by weak count:
    // each type-2 edge with <= 1 weak member appears among the promoted
    const Hypergraph& t2 = tr.split.type2;
    for (EdgeIndex i = 0; i < t2.m(); ++i) {
      int weak_members = 0;
      for (Vertex v : t2.edge(i))
        if (weak.count(v)) ++weak_members;
      if (weak_members <= 1) {
        bool found = false;
        for (const OrientedEdge& e : tr.promoted)
          found |= (e.unoriented() == t2.edge(i));
        CHECK(found);
      }
    }
  }
}

TEST_CASE("transcripts are reproducible and serialize to valid JSON") {
  CouplingParams params;
  params.n = 6;
  params.r = 3;
  params.eps = 0.5;
  CouplingTranscript a = run_coupling(params, Seed{99, 0});
  CouplingTranscript b = run_coupling(params, Seed{99, 0});
  std::string ja = transcript_json(a);
  CHECK(ja == transcript_json(b));

  nlohmann::json parsed = nlohmann::json::parse(ja);
  CHECK(parsed.contains("probabilities"));
  CHECK(parsed.contains("layers"));
  CHECK(parsed.contains("failure"));
  CHECK(parsed.contains("promoted"));
  CHECK(parsed["probabilities"].contains("p_star"));
}

TEST_CASE("coupled binomial pairs never violate the dominance order") {
  Rng rng(Seed{42, 0});
  for (std::uint64_t n : {1ull, 5ull, 20ull}) {
    for (double p : {0.05, 0.3, 0.5}) {
      for (std::uint64_t k : {1ull, 3ull}) {
        for (std::uint64_t l : {2ull, 4ull}) {
          for (int t = 0; t < 500; ++t) {
            BinomialCouple c = couple_binomials(n, p, k, l, rng);
            CHECK(c.x <= c.y);
            CHECK(c.y <= l * k * n);
          }
        }
      }
    }
  }
}

TEST_CASE("degenerate coupling probabilities behave predictably") {
  Rng rng(Seed{43, 0});
  for (int t = 0; t < 50; ++t) {
    BinomialCouple c = couple_binomials(10, 0.0, 4, 2, rng);
    CHECK(c.x == 0);
    CHECK(c.y == 0);
  }
  CHECK_THROWS_AS((void)couple_binomials(10, 0.6, 4, 2, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)couple_binomials(10, 0.3, 4, 1, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)couple_binomials(10, -0.1, 4, 2, rng),
                  std::invalid_argument);
}

TEST_CASE("coupled marginals have the right means") {
  Rng rng(Seed{44, 0});
  const int trials = 20000;
  double sum_x = 0, sum_y = 0;
  for (int t = 0; t < trials; ++t) {
    BinomialCouple c = couple_binomials(10, 0.3, 4, 2, rng);
    sum_x += static_cast<double>(c.x);
    sum_y += static_cast<double>(c.y);
  }
  // E[X] = 10 * 0.3 = 3; E[Y] = 2 * 4 * 10 * 0.3/4 = 6
  double sigma_x = std::sqrt(10 * 0.3 * 0.7 / trials);
  double sigma_y = std::sqrt(80 * 0.075 * 0.925 / trials);
  CHECK(std::fabs(sum_x / trials - 3.0) < 4 * sigma_x);
  CHECK(std::fabs(sum_y / trials - 6.0) < 4 * sigma_y);
}

TEST_CASE("marginal fit statistic accepts true binomial samples") {
  Rng rng(Seed{45, 0});
  std::vector<std::uint64_t> values;
  for (int t = 0; t < 5000; ++t) values.push_back(rng.binomial_count(12, 0.4));
  ChiSquare fit = binomial_fit(values, 12, 0.4);
  CHECK(fit.p_value > 0.001);
  CHECK(fit.statistic >= 0.0);
  CHECK(fit.df >= 1);
}

TEST_CASE("dominance verification runs inside the regime") {
  DominanceReport report =
      verify_binomial_dominance(2000, 3, 0.3, 0.1, 1, 4000, Seed{77, 0});
  CHECK(report.in_regime);
  CHECK(report.l >= 2);
  CHECK(report.p <= 0.5);
  CHECK(report.trials == 4000);
  CHECK(report.violations == 0);
  CHECK(report.expected_x ==
        doctest::Approx(static_cast<double>(report.n_blocks) * report.p));
  // mean within 5 sigma of expectation
  double sigma = std::sqrt(static_cast<double>(report.n_blocks) * report.p *
                           (1 - report.p) / 4000);
  CHECK(std::fabs(report.mean_x - report.expected_x) < 5 * sigma);
  CHECK(report.mean_y >= report.mean_x);
}

TEST_CASE("dominance verification flags the out-of-regime corner") {
  // large rho drives the block multiplier below 2
  DominanceReport report =
      verify_binomial_dominance(10000, 3, 0.5, 0.1, 3, 1000, Seed{78, 0});
  CHECK_FALSE(report.in_regime);
  CHECK(report.trials == 0);
  CHECK(report.violations == 0);

  // tiny n drives P above 1/2
  DominanceReport small =
      verify_binomial_dominance(100, 3, 0.3, 0.1, 1, 1000, Seed{78, 1});
  CHECK(small.p == doctest::Approx(std::pow(100.0, -0.1)).epsilon(1e-12));
  CHECK_FALSE(small.in_regime);
  CHECK(small.trials == 0);
}

TEST_CASE("promoted plus retained edges look binomial at density p2") {
  MarginalReport report =
      marginal_identity_check(6, 3, 0.5, 3000, Seed{314, 0});
  CHECK(report.trials == 3000);
  CHECK(report.edge_frequency.size() == binom(6, 3));
  CHECK(report.p2 > 0);
  CHECK(report.sigma ==
        doctest::Approx(std::sqrt(report.p2 * (1 - report.p2) / 3000))
            .epsilon(1e-12));
  CHECK(report.max_abs_z <= 3.0);
  CHECK(report.frequencies_ok);
  CHECK(std::fabs(report.covariance_z) <= 3.0);
  CHECK(report.independence_ok);

  CHECK_THROWS_AS((void)marginal_identity_check(9, 3, 0.5, 10, Seed{314, 0}),
                  std::invalid_argument);
}
