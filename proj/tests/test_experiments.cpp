#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "rhg/certificates.hpp"
#include "rhg/experiments.hpp"
#include "rhg/hypergraph.hpp"
#include "rhg/util.hpp"

using namespace rhg;

namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig config;
  config.n = 6;
  config.r = 3;
  config.grid = {0.0, 0.5, 1.0, 100.0};
  config.trials = 40;
  config.seed = Seed{12345, 0};
  return config;
}

}  // namespace

TEST_CASE("configuration validation rejects unusable settings") {
  ExperimentConfig config = tiny_config();
  CHECK_NOTHROW(validate(config));
  config.grid.clear();
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = tiny_config();
  config.trials = 0;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = tiny_config();
  config.r = 1;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = tiny_config();
  config.n = 2;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  // n not divisible by r-1 is allowed: the sweep reports honest zeros
  config = tiny_config();
  config.n = 7;
  CHECK_NOTHROW(validate(config));
}

TEST_CASE("grid ratios convert to clamped edge counts") {
  // m = round(ratio * n ln(n) / r) clamped to [0, C(n,r)]
  const double scale = 6 * std::log(6.0) / 3;
  CHECK(grid_edge_count(6, 3, 0.0) == 0);
  CHECK(grid_edge_count(6, 3, 1.0) ==
        static_cast<std::uint64_t>(std::llround(scale)));
  CHECK(grid_edge_count(6, 3, 100.0) == binom(6, 3));  // clamped at complete
  CHECK(grid_edge_count(21, 3, 1.0) ==
        static_cast<std::uint64_t>(std::llround(21 * std::log(21.0) / 3)));
}

TEST_CASE("sweep rates hit the trivial extremes and stay monotone") {
  ExperimentResult result = threshold_sweep(tiny_config());
  REQUIRE(result.points.size() == 4);

  const GridPointResult& empty = result.points.front();
  CHECK(empty.edges == 0);
  CHECK(empty.rate == doctest::Approx(0.0));
  CHECK(empty.isolated == empty.records.size());  // all vertices isolated

  const GridPointResult& complete = result.points.back();
  CHECK(complete.edges == binom(6, 3));
  CHECK(complete.rate == doctest::Approx(1.0));
  CHECK(complete.isolated == 0);

  double prev = -1;
  for (const GridPointResult& point : result.points) {
    CHECK(point.found + point.not_found + point.budget_exceeded ==
          result.config.trials);
    CHECK(point.rate >= prev);  // exhaustive solver + nested prefixes
    prev = point.rate;
    CHECK(point.records.size() == result.config.trials);
    // the interval brackets the estimate (up to float fuzz at the extremes)
    CHECK(point.confidence.low <= point.rate + 1e-12);
    CHECK(point.rate <= point.confidence.high + 1e-12);
  }
}

TEST_CASE("confidence intervals narrow as trials grow") {
  ExperimentConfig small = tiny_config();
  small.grid = {0.5};
  small.trials = 20;
  ExperimentConfig large = small;
  large.trials = 200;
  ExperimentResult rs = threshold_sweep(small);
  ExperimentResult rl = threshold_sweep(large);
  double width_s = rs.points[0].confidence.high - rs.points[0].confidence.low;
  double width_l = rl.points[0].confidence.high - rl.points[0].confidence.low;
  CHECK(width_l < width_s);
}

TEST_CASE("sweep results are reproducible and thread-count independent") {
  ExperimentConfig config = tiny_config();
  ExperimentResult a = threshold_sweep(config);
  ExperimentResult b = threshold_sweep(config);
  CHECK(a == b);
  CHECK(sweep_csv(a) == sweep_csv(b));
  CHECK(result_json(a) == result_json(b));

  ExperimentConfig threaded = config;
  threaded.threads = 4;
  ExperimentResult c = threshold_sweep(threaded);
  REQUIRE(c.points.size() == a.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    // identical data; only the embedded config (threads) differs
    CHECK(c.points[i].records == a.points[i].records);
    CHECK(c.points[i].rate == a.points[i].rate);
  }
}

TEST_CASE("the JSON artifact round-trips exactly") {
  ExperimentResult result = threshold_sweep(tiny_config());
  std::string text = result_json(result);
  ExperimentResult back = result_from_json(text);
  CHECK(back == result);              // wall times excluded from equality
  CHECK(result_json(back) == text);   // and from the serialized form
}

TEST_CASE("the CSV artifact lists one row per trial") {
  ExperimentConfig config = tiny_config();
  config.grid = {0.5, 1.0};
  config.trials = 7;
  ExperimentResult result = threshold_sweep(config);
  std::string csv = sweep_csv(result);
  std::size_t rows = 0;
  std::size_t header_or_comment = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string::npos) eol = csv.size();
    std::string line = csv.substr(pos, eol - pos);
    if (!line.empty()) {
      if (line[0] == '#' || line.rfind("point,", 0) == 0)
        ++header_or_comment;
      else
        ++rows;
    }
    pos = eol + 1;
  }
  CHECK(rows == 2 * 7);
  CHECK(header_or_comment >= 1);
}

TEST_CASE("the matching pipeline validates its divisibility requirements") {
  CHECK_THROWS_AS((void)matching_pipeline(10, 3, 1.0, Seed{1, 0}),
                  std::invalid_argument);  // 6 does not divide 10
  CHECK_THROWS_AS((void)matching_pipeline(12, 3, 0.0, Seed{1, 0}),
                  std::invalid_argument);  // eps must be positive
  CHECK_THROWS_AS((void)matching_pipeline(12, 1, 1.0, Seed{1, 0}),
                  std::invalid_argument);  // r too small
}

TEST_CASE("the matching pipeline composes matchings into a loose cycle") {
  bool saw_success = false;
  bool saw_failure = false;
  for (std::uint64_t s = 0; s < 12 && !(saw_success && saw_failure); ++s) {
    PipelineReport report = matching_pipeline(12, 3, 1.0, Seed{s, 0});
    CHECK(report.n == 12);
    CHECK(report.rho == 4);  // floor(rho(3)) + 1
    REQUIRE(report.stages.size() == report.rho + 1);
    for (std::uint32_t i = 0; i < report.rho; ++i)
      CHECK(report.stages[i].name ==
            "matching-" + std::to_string(i + 1));
    CHECK(report.stages.back().name == "loose-cycle");

    if (report.success) {
      saw_success = true;
      CHECK(report.failed_stage.empty());
      REQUIRE(report.matchings.size() == report.rho);
      // every matching is a perfect matching: n/r disjoint edges
      for (const std::vector<Edge>& matching : report.matchings) {
        CHECK(matching.size() == 4);
        std::set<Vertex> seen;
        for (const Edge& e : matching)
          for (Vertex v : e) CHECK(seen.insert(v).second);
        CHECK(seen.size() == 12);
      }
      REQUIRE(report.cycle.has_value());
      Hypergraph host(12, 3, report.union_edges);
      CHECK(validate_loose_cycle(host, *report.cycle) == CycleError::none);
      CHECK(std::is_sorted(report.union_edges.begin(),
                           report.union_edges.end()));
    } else {
      saw_failure = true;
      CHECK_FALSE(report.failed_stage.empty());
      // the named stage really is the first without a find
      bool hit = false;
      for (const PipelineStage& stage : report.stages) {
        if (stage.name == report.failed_stage) {
          CHECK(stage.status != SearchStatus::found);
          hit = true;
          break;
        }
        CHECK(stage.status == SearchStatus::found);
      }
      CHECK(hit);
    }
  }
  CHECK(saw_success);
  CHECK(saw_failure);
}

TEST_CASE("a zero budget marks every pipeline solver stage as cut off") {
  PipelineReport report = matching_pipeline(12, 3, 1.0, Seed{3, 0}, 0);
  CHECK_FALSE(report.success);
  REQUIRE(report.stages.size() == report.rho + 1);
  for (const PipelineStage& stage : report.stages)
    CHECK(stage.status == SearchStatus::budget_exceeded);
  CHECK(report.matchings.empty());
  CHECK(report.failed_stage == report.stages.front().name);
}

TEST_CASE("pipeline reports serialize with their stage breakdown") {
  PipelineReport report = matching_pipeline(12, 3, 1.0, Seed{0, 0});
  std::string text = pipeline_json(report);
  CHECK(text.find("loose-cycle") != std::string::npos);
  CHECK(text.find("matching-1") != std::string::npos);
  // wall-clock values never enter artifacts
  CHECK(text.find("wall") == std::string::npos);
  CHECK(pipeline_json(matching_pipeline(12, 3, 1.0, Seed{0, 0})) == text);
}

TEST_CASE("zero trials yield an empty passing suite") {
  ExperimentConfig config = tiny_config();
  config.trials = 0;
  SuiteReport report = statistical_suite(config);
  CHECK(report.claims.empty());
  CHECK(report.all_pass);
}

TEST_CASE("the suite checks each distributional claim exactly once") {
  ExperimentConfig config = tiny_config();
  config.trials = 300;  // light smoke pass; the acceptance harness runs deep
  SuiteReport report = statistical_suite(config);

  const std::set<std::string> expected{
      "fixed-size-edge-inclusion",    "binomial-edge-count",
      "oriented-projection-rate",     "out-model-pick-uniformity",
      "matching-union-uniformity",    "stream-independence",
      "binomial-conditional-uniformity", "oriented-projection-distribution",
      "binomial-dominance",           "binomial-couple-means",
      "split-marginal-identity",      "split-union-density",
      "layer-independence",           "embedding-pick-uniformity",
      "contraction-acceptance-rate",  "contraction-image-presence",
      "codegree-bound-simulation"};
  std::set<std::string> seen;
  for (const ClaimResult& claim : report.claims) {
    CHECK(seen.insert(claim.name).second);  // unique
    CHECK_FALSE(claim.description.empty());
    CHECK(claim.p_value >= 0.0);
    CHECK(claim.p_value <= 1.0);
  }
  CHECK(seen == expected);
  CHECK(report.threshold ==
        doctest::Approx(config.significance / expected.size()));
  CHECK(report.config == config);
}

TEST_CASE("suite reports round-trip through JSON") {
  ExperimentConfig config = tiny_config();
  config.trials = 200;
  SuiteReport report = statistical_suite(config);
  std::string text = suite_json(report);
  SuiteReport back = suite_from_json(text);
  CHECK(back == report);
  CHECK(suite_json(back) == text);
}

TEST_CASE("the suite passes wholesale at a production sample size") {
  ExperimentConfig config = tiny_config();
  config.trials = 5000;
  SuiteReport report = statistical_suite(config);
  for (const ClaimResult& claim : report.claims) {
    CAPTURE(claim.name);
    CAPTURE(claim.detail);
    CHECK(claim.pass);
  }
  CHECK(report.all_pass);
}
