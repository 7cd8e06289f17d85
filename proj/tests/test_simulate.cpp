#include "cascal/simulate.hpp"

#include <stdexcept>

#include "cascal/error_model.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace cascal;
using fixtures::MixtureMatcher;
using fixtures::mixture_table;

namespace {

CascadeModel hand_model() {
  CascadeModel model;
  StageConfig stage;
  stage.matcher = "m1";
  stage.lower = {0.3, 0.5, 0.0, PointKind::zero_frr};
  stage.upper = {0.7, 0.0, 0.5, PointKind::zero_far};
  model.stages.push_back(stage);
  model.last_matcher = "m2";
  model.last_roc.points = {{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}};
  return model;
}

MatchedScoreTable hand_probe() {
  MatchedScoreTable table;
  table.matcher_names = {"m1", "m2"};
  table.rows = {
      {"g1", Label::genuine, {0.8, 0.5}},   // accepted at stage 1
      {"g2", Label::genuine, {0.5, 0.9}},   // forwarded, accepted at last
      {"g3", Label::genuine, {0.2, 0.9}},   // rejected at stage 1
      {"g4", Label::genuine, {0.3, 0.4}},   // boundary: forwarded, rejected at last
      {"i1", Label::impostor, {0.75, 0.1}}, // accepted at stage 1
      {"i2", Label::impostor, {0.4, 0.2}},  // forwarded, rejected at last
  };
  return table;
}

}  // namespace

TEST_SUITE("sim") {

TEST_CASE("decide_stage boundaries belong to the uncertainty region") {
  const StageConfig stage = hand_model().stages[0];
  CHECK(decide_stage(0.71, stage) == Decision::accept);
  CHECK(decide_stage(0.7, stage) == Decision::forward);
  CHECK(decide_stage(0.5, stage) == Decision::forward);
  CHECK(decide_stage(0.3, stage) == Decision::forward);
  CHECK(decide_stage(0.29, stage) == Decision::reject);
}

TEST_CASE("run_cascade matches the hand-traced walk") {
  const CascadeRunResult result = run_cascade(hand_model(), hand_probe(), 0.5);
  CHECK(result.far == 0.5);
  CHECK(result.frr == 0.5);
  CHECK(result.mean_stages_used == 1.5);
  REQUIRE(result.stages.size() == 2);
  CHECK(result.stages[0].accepted_genuine == 1);
  CHECK(result.stages[0].rejected_genuine == 1);
  CHECK(result.stages[0].forwarded_genuine == 2);
  CHECK(result.stages[0].accepted_impostor == 1);
  CHECK(result.stages[0].rejected_impostor == 0);
  CHECK(result.stages[0].forwarded_impostor == 1);
  CHECK(result.stages[1].accepted_genuine == 1);
  CHECK(result.stages[1].rejected_genuine == 1);
  CHECK(result.stages[1].accepted_impostor == 0);
  CHECK(result.stages[1].rejected_impostor == 1);
  CHECK(result.stages[1].forwarded_genuine == 0);
  CHECK(result.stages[1].forwarded_impostor == 0);
}

TEST_CASE("separable data decides everything at stage 1") {
  MixtureMatcher separable;
  separable.floor_lo = 1.2;
  separable.bulk_lo = 1.4;
  separable.clear_lo = 1.6;
  const MatchedScoreTable table = mixture_table({separable, separable}, 100, 200, 44);
  const CascadeModel model = calibrate(table, {"m1", "m2"});
  const CascadeRunResult result = run_cascade(model, table, 1.1);
  CHECK(result.far == 0.0);
  CHECK(result.frr == 0.0);
  CHECK(result.mean_stages_used == 1.0);
}

TEST_CASE("impostors below every lower threshold are rejected at stage 1") {
  const CascadeModel model = hand_model();
  MatchedScoreTable probe;
  probe.matcher_names = {"m1", "m2"};
  probe.rows = {
      {"g1", Label::genuine, {0.5, 0.9}},
      {"i1", Label::impostor, {0.1, 0.9}},
      {"i2", Label::impostor, {0.2, 0.9}},
  };
  const CascadeRunResult result = run_cascade(model, probe, 0.5);
  CHECK(result.stages[0].rejected_impostor == 2);
  CHECK(result.far == 0.0);
}

TEST_CASE("stage conservation holds per class") {
  const MatchedScoreTable table =
      mixture_table(fixtures::three_distinct_matchers(), 500, 1500, 45);
  const CascadeModel model = calibrate(table, {"m1", "m2", "m3"});
  const MatchedScoreTable probe =
      mixture_table(fixtures::three_distinct_matchers(), 400, 1200, 46);
  const CascadeRunResult result = run_cascade(model, probe, 0.8);
  std::size_t inflow_gen = result.n_genuine;
  std::size_t inflow_imp = result.n_impostor;
  for (const auto& tally : result.stages) {
    CHECK(tally.accepted_genuine + tally.rejected_genuine + tally.forwarded_genuine ==
          inflow_gen);
    CHECK(tally.accepted_impostor + tally.rejected_impostor + tally.forwarded_impostor ==
          inflow_imp);
    inflow_gen = tally.forwarded_genuine;
    inflow_imp = tally.forwarded_impostor;
  }
  CHECK(result.stages.back().forwarded_genuine == 0);
  CHECK(result.stages.back().forwarded_impostor == 0);

  // far/frr are recomputable from the stage counts
  std::size_t accepted_impostors = 0, rejected_genuines = 0;
  for (const auto& tally : result.stages) {
    accepted_impostors += tally.accepted_impostor;
    rejected_genuines += tally.rejected_genuine;
  }
  CHECK(result.far ==
        static_cast<double>(accepted_impostors) / static_cast<double>(result.n_impostor));
  CHECK(result.frr ==
        static_cast<double>(rejected_genuines) / static_cast<double>(result.n_genuine));
}

TEST_CASE("raising the last threshold is monotone in far and frr") {
  const MatchedScoreTable table =
      mixture_table(fixtures::three_distinct_matchers(), 300, 900, 47);
  const CascadeModel model = calibrate(table, {"m1", "m3"});
  const MatchedScoreTable probe =
      mixture_table(fixtures::three_distinct_matchers(), 300, 900, 48);
  const RocCurve curve = empirical_roc(model, probe, score_grid(probe, "m3"));
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    CHECK(curve.points[i].far >= curve.points[i + 1].far);
    CHECK(curve.points[i].frr <= curve.points[i + 1].frr);
  }
}

TEST_CASE("no early losses on the training data itself") {
  const MatchedScoreTable table =
      mixture_table(fixtures::three_distinct_matchers(), 400, 1200, 49);
  const CascadeModel model = calibrate(table, {"m1", "m2", "m3"});
  const CascadeRunResult result = run_cascade(model, table, 0.9);
  for (std::size_t i = 0; i + 1 < result.stages.size(); ++i) {
    CHECK(result.stages[i].rejected_genuine == 0);
    CHECK(result.stages[i].accepted_impostor == 0);
  }
}

TEST_CASE("empirical_roc equals per-threshold run_cascade") {
  const MatchedScoreTable table =
      mixture_table(fixtures::three_distinct_matchers(), 200, 600, 50);
  const CascadeModel model = calibrate(table, {"m2", "m3"});
  const MatchedScoreTable probe =
      mixture_table(fixtures::three_distinct_matchers(), 150, 450, 51);
  const std::vector<double> grid = uniform_grid(model.last_roc, 9);
  const RocCurve curve = empirical_roc(model, probe, grid);
  REQUIRE(curve.points.size() == grid.size());
  for (const auto& p : curve.points) {
    const CascadeRunResult result = run_cascade(model, probe, p.threshold);
    CHECK(p.far == result.far);
    CHECK(p.frr == result.frr);
  }
}

TEST_CASE("single-threshold grid gives a single-point curve") {
  const CascadeModel model = hand_model();
  const RocCurve curve = empirical_roc(model, hand_probe(), {0.5});
  REQUIRE(curve.points.size() == 1);
  const CascadeRunResult result = run_cascade(model, hand_probe(), 0.5);
  CHECK(curve.points[0].far == result.far);
  CHECK(curve.points[0].frr == result.frr);
}

TEST_CASE("independent probe converges to the prediction") {
  const auto matchers = fixtures::three_distinct_matchers();
  const MatchedScoreTable train = mixture_table(matchers, 5000, 50000, 52);
  const MatchedScoreTable probe = mixture_table(matchers, 5000, 50000, 1052);
  const CascadeModel model = calibrate(train, {"m1", "m2", "m3"});
  const RocCurve predicted = to_curve(predict_roc(model));
  const RocCurve empirical = empirical_roc(model, probe, score_grid(probe, "m3"));
  const DivergenceReport report = compare_rocs(predicted, empirical);
  CHECK(report.mean_abs_dfar < 0.01);
  CHECK(report.mean_abs_dfrr < 0.01);
}

TEST_CASE("fully correlated duplicate matchers diverge more than independent ones") {
  MixtureMatcher shape;  // identical marginals for every column
  const std::size_t n_gen = 3000, n_imp = 30000;

  // independent: two fresh draws per row
  const MatchedScoreTable train_i = mixture_table({shape, shape}, n_gen, n_imp, 53);
  const MatchedScoreTable probe_i = mixture_table({shape, shape}, n_gen, n_imp, 1053);

  // correlated: duplicate the first column (rho = 1)
  auto duplicate_column = [](MatchedScoreTable table) {
    for (auto& row : table.rows) row.scores[1] = row.scores[0];
    return table;
  };
  const MatchedScoreTable train_c = duplicate_column(train_i);
  const MatchedScoreTable probe_c = duplicate_column(probe_i);

  auto divergence = [](const MatchedScoreTable& train, const MatchedScoreTable& probe) {
    const CascadeModel model = calibrate(train, {"m1", "m2"});
    const RocCurve predicted = to_curve(predict_roc(model));
    const RocCurve empirical = empirical_roc(model, probe, score_grid(probe, "m2"));
    return compare_rocs(predicted, empirical).mean_abs_dfar;
  };
  CHECK(divergence(train_c, probe_c) > divergence(train_i, probe_i));
}

TEST_CASE("compare_rocs: identical curves have zero divergence") {
  const MatchedScoreTable table =
      mixture_table(fixtures::three_distinct_matchers(), 100, 300, 54);
  const RocCurve curve = build_roc(column_score_set(table, "m2"));
  const DivergenceReport report = compare_rocs(curve, curve);
  CHECK(report.mean_abs_dfar == 0.0);
  CHECK(report.max_abs_dfar == 0.0);
  CHECK(report.mean_abs_dfrr == 0.0);
  CHECK(report.max_abs_dfrr == 0.0);
}

TEST_CASE("compare_rocs: constant far offset is reported exactly") {
  RocCurve a, b;
  a.points = {{0.0, 0.5, 0.1}, {1.0, 0.3, 0.4}, {2.0, 0.1, 0.8}};
  b.points = {{0.0, 0.6, 0.1}, {1.0, 0.4, 0.4}, {2.0, 0.2, 0.8}};
  const DivergenceReport report = compare_rocs(a, b);
  CHECK(report.mean_abs_dfar == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(report.max_abs_dfar == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("error paths") {
  const CascadeModel model = hand_model();
  MatchedScoreTable missing;
  missing.matcher_names = {"x", "y"};
  missing.rows = {{"g", Label::genuine, {0.5, 0.5}}, {"i", Label::impostor, {0.1, 0.1}}};
  CHECK_THROWS_WITH_AS(run_cascade(model, missing, 0.5), doctest::Contains("unknown matcher"),
                       std::runtime_error);

  MatchedScoreTable single;
  single.matcher_names = {"m1", "m2"};
  single.rows = {{"g", Label::genuine, {0.5, 0.5}}};
  CHECK_THROWS_AS(run_cascade(model, single, 0.5), std::runtime_error);

  CHECK_THROWS_AS(empirical_roc(model, hand_probe(), {}), std::runtime_error);
}

}  // TEST_SUITE
