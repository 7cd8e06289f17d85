#include "cascal/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace cascal {

Decision decide_stage(double score, const StageConfig& stage) {
  if (score > stage.upper.threshold) return Decision::accept;
  if (score < stage.lower.threshold) return Decision::reject;
  return Decision::forward;
}

namespace {

// One pass over the probe rows. The stage walk does not depend on the last
// threshold, so everything except the final accept/reject split can be
// tallied once and reused for a whole threshold grid.
struct CascadeWalk {
  std::vector<StageTally> stages;       // last entry covers the final stage, fwd/acc open
  std::vector<double> fwd_genuine;      // last-matcher scores of forwarded rows
  std::vector<double> fwd_impostor;
  std::size_t n_genuine = 0;
  std::size_t n_impostor = 0;
  std::size_t early_accepted_impostor = 0;
  std::size_t early_rejected_genuine = 0;
  double stages_used_sum = 0.0;
};

CascadeWalk walk_cascade(const CascadeModel& model, const MatchedScoreTable& probe) {
  if (probe.count(Label::genuine) == 0 || probe.count(Label::impostor) == 0) {
    throw std::runtime_error("probe table needs both genuine and impostor rows");
  }
  std::vector<std::size_t> columns;
  columns.reserve(model.chain_length());
  for (const auto& stage : model.stages) columns.push_back(probe.matcher_index(stage.matcher));
  columns.push_back(probe.matcher_index(model.last_matcher));

  CascadeWalk walk;
  walk.stages.resize(model.chain_length());
  for (const auto& row : probe.rows) {
    const bool genuine = row.label == Label::genuine;
    (genuine ? walk.n_genuine : walk.n_impostor)++;
    bool settled = false;
    for (std::size_t i = 0; i < model.stages.size(); ++i) {
      const Decision decision = decide_stage(row.scores[columns[i]], model.stages[i]);
      StageTally& tally = walk.stages[i];
      if (decision == Decision::accept) {
        (genuine ? tally.accepted_genuine : tally.accepted_impostor)++;
        if (!genuine) ++walk.early_accepted_impostor;
      } else if (decision == Decision::reject) {
        (genuine ? tally.rejected_genuine : tally.rejected_impostor)++;
        if (genuine) ++walk.early_rejected_genuine;
      } else {
        (genuine ? tally.forwarded_genuine : tally.forwarded_impostor)++;
        continue;
      }
      walk.stages_used_sum += static_cast<double>(i + 1);
      settled = true;
      break;
    }
    if (!settled) {
      walk.stages_used_sum += static_cast<double>(model.chain_length());
      (genuine ? walk.fwd_genuine : walk.fwd_impostor).push_back(row.scores[columns.back()]);
    }
  }
  std::sort(walk.fwd_genuine.begin(), walk.fwd_genuine.end());
  std::sort(walk.fwd_impostor.begin(), walk.fwd_impostor.end());
  return walk;
}

std::size_t count_above(const std::vector<double>& sorted, double t) {
  return sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
}

std::size_t count_at_or_below(const std::vector<double>& sorted, double t) {
  return std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
}

double walk_far(const CascadeWalk& walk, double t) {
  return static_cast<double>(walk.early_accepted_impostor + count_above(walk.fwd_impostor, t)) /
         static_cast<double>(walk.n_impostor);
}

double walk_frr(const CascadeWalk& walk, double t) {
  return static_cast<double>(walk.early_rejected_genuine +
                             count_at_or_below(walk.fwd_genuine, t)) /
         static_cast<double>(walk.n_genuine);
}

}  // namespace

CascadeRunResult run_cascade(const CascadeModel& model, const MatchedScoreTable& probe,
                             double last_threshold) {
  CascadeWalk walk = walk_cascade(model, probe);
  CascadeRunResult result;
  result.stages = walk.stages;
  StageTally& last = result.stages.back();
  last.accepted_genuine = count_above(walk.fwd_genuine, last_threshold);
  last.rejected_genuine = walk.fwd_genuine.size() - last.accepted_genuine;
  last.accepted_impostor = count_above(walk.fwd_impostor, last_threshold);
  last.rejected_impostor = walk.fwd_impostor.size() - last.accepted_impostor;
  result.n_genuine = walk.n_genuine;
  result.n_impostor = walk.n_impostor;
  result.far = walk_far(walk, last_threshold);
  result.frr = walk_frr(walk, last_threshold);
  result.mean_stages_used =
      walk.stages_used_sum / static_cast<double>(walk.n_genuine + walk.n_impostor);
  return result;
}

RocCurve empirical_roc(const CascadeModel& model, const MatchedScoreTable& probe,
                       const std::vector<double>& thresholds) {
  if (thresholds.empty()) throw std::runtime_error("empty threshold grid");
  CascadeWalk walk = walk_cascade(model, probe);
  std::vector<double> grid = thresholds;
  std::sort(grid.begin(), grid.end());
  RocCurve curve;
  curve.points.reserve(grid.size());
  for (double t : grid) {
    curve.points.push_back({t, walk_far(walk, t), walk_frr(walk, t)});
  }
  return curve;
}

std::vector<double> score_grid(const MatchedScoreTable& probe, const std::string& matcher) {
  const std::size_t col = probe.matcher_index(matcher);
  std::vector<double> grid;
  grid.reserve(probe.rows.size() + 2);
  for (const auto& row : probe.rows) grid.push_back(row.scores[col]);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) throw std::runtime_error("probe table has no rows");
  grid.insert(grid.begin(), grid.front() - 1.0);
  grid.push_back(grid.back() + 1.0);
  return grid;
}

std::vector<double> uniform_grid(const RocCurve& curve, std::size_t k) {
  if (curve.points.empty()) throw std::runtime_error("uniform grid over an empty curve");
  if (k < 2) throw std::runtime_error("uniform grid needs at least 2 points");
  const double lo = curve.points.front().threshold;
  const double hi = curve.points.back().threshold;
  std::vector<double> grid;
  grid.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1));
  }
  return grid;
}

namespace {

// far as a step function of frr: the smallest far among points with
// frr <= query. Points come in threshold order, so frr is non-decreasing and
// far non-increasing; the answer is the last point with frr <= query.
double far_at_frr(const RocCurve& curve, double frr) {
  auto it = std::upper_bound(curve.points.begin(), curve.points.end(), frr,
                             [](double f, const RocPoint& p) { return f < p.frr; });
  if (it == curve.points.begin()) return 1.0;  // outside the curve's range
  return (it - 1)->far;
}

// frr as a step function of far: the smallest frr among points with
// far <= query, i.e. the earliest point in threshold order inside the set.
double frr_at_far(const RocCurve& curve, double far) {
  auto it = std::lower_bound(curve.points.begin(), curve.points.end(), far,
                             [](const RocPoint& p, double f) { return p.far > f; });
  if (it == curve.points.end()) return 1.0;
  return it->frr;
}

std::vector<double> overlap_grid(const RocCurve& a, const RocCurve& b, bool use_frr) {
  auto value = [use_frr](const RocPoint& p) { return use_frr ? p.frr : p.far; };
  auto minmax = [&](const RocCurve& c) {
    double lo = value(c.points.front()), hi = lo;
    for (const auto& p : c.points) {
      lo = std::min(lo, value(p));
      hi = std::max(hi, value(p));
    }
    return std::pair<double, double>(lo, hi);
  };
  const auto [lo_a, hi_a] = minmax(a);
  const auto [lo_b, hi_b] = minmax(b);
  const double lo = std::max(lo_a, lo_b);
  const double hi = std::min(hi_a, hi_b);
  std::vector<double> grid;
  if (hi < lo) return grid;
  for (const auto* curve : {&a, &b}) {
    for (const auto& p : curve->points) {
      const double v = value(p);
      if (v >= lo && v <= hi) grid.push_back(v);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

DivergenceReport compare_rocs(const RocCurve& a, const RocCurve& b) {
  if (a.points.empty() || b.points.empty()) {
    throw std::runtime_error("compare_rocs needs non-empty curves");
  }
  DivergenceReport report;

  const std::vector<double> frr_grid = overlap_grid(a, b, true);
  report.frr_grid_size = frr_grid.size();
  for (double f : frr_grid) {
    const double d = std::abs(far_at_frr(a, f) - far_at_frr(b, f));
    report.mean_abs_dfar += d;
    report.max_abs_dfar = std::max(report.max_abs_dfar, d);
  }
  if (!frr_grid.empty()) report.mean_abs_dfar /= static_cast<double>(frr_grid.size());

  const std::vector<double> far_grid = overlap_grid(a, b, false);
  report.far_grid_size = far_grid.size();
  for (double g : far_grid) {
    const double d = std::abs(frr_at_far(a, g) - frr_at_far(b, g));
    report.mean_abs_dfrr += d;
    report.max_abs_dfrr = std::max(report.max_abs_dfrr, d);
  }
  if (!far_grid.empty()) report.mean_abs_dfrr /= static_cast<double>(far_grid.size());
  return report;
}

std::string run_result_to_json(const CascadeRunResult& result) {
  nlohmann::json doc;
  doc["far"] = result.far;
  doc["frr"] = result.frr;
  doc["mean_stages_used"] = result.mean_stages_used;
  doc["n_genuine"] = result.n_genuine;
  doc["n_impostor"] = result.n_impostor;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& tally : result.stages) {
    stages.push_back({{"accepted_genuine", tally.accepted_genuine},
                      {"rejected_genuine", tally.rejected_genuine},
                      {"forwarded_genuine", tally.forwarded_genuine},
                      {"accepted_impostor", tally.accepted_impostor},
                      {"rejected_impostor", tally.rejected_impostor},
                      {"forwarded_impostor", tally.forwarded_impostor}});
  }
  doc["stages"] = stages;
  return doc.dump(2) + "\n";
}

std::string divergence_to_json(const DivergenceReport& report) {
  nlohmann::json doc;
  doc["mean_abs_dfar"] = report.mean_abs_dfar;
  doc["max_abs_dfar"] = report.max_abs_dfar;
  doc["mean_abs_dfrr"] = report.mean_abs_dfrr;
  doc["max_abs_dfrr"] = report.max_abs_dfrr;
  doc["frr_grid_size"] = report.frr_grid_size;
  doc["far_grid_size"] = report.far_grid_size;
  return doc.dump(2) + "\n";
}

}  // namespace cascal
