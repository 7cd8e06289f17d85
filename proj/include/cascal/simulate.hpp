#pragma once

#include "cascal/cascade.hpp"

namespace cascal {

enum class Decision { accept, reject, forward };

struct StageTally {
  std::size_t accepted_genuine = 0, rejected_genuine = 0, forwarded_genuine = 0;
  std::size_t accepted_impostor = 0, rejected_impostor = 0, forwarded_impostor = 0;
};

struct CascadeRunResult {
  double far = 0.0;  // accepted impostors / impostors, any stage
  double frr = 0.0;  // rejected genuines / genuines, any stage
  std::vector<StageTally> stages;  // one per chain stage, last included
  double mean_stages_used = 0.0;
  std::size_t n_genuine = 0;
  std::size_t n_impostor = 0;
};

struct DivergenceReport {
  double mean_abs_dfar = 0.0, max_abs_dfar = 0.0;  // on the common FRR grid
  double mean_abs_dfrr = 0.0, max_abs_dfrr = 0.0;  // on the common FAR grid
  std::size_t frr_grid_size = 0, far_grid_size = 0;
};

// accept iff score > upper.threshold, reject iff score < lower.threshold,
// forward otherwise (boundaries belong to the uncertainty region).
Decision decide_stage(double score, const StageConfig& stage);

CascadeRunResult run_cascade(const CascadeModel& model, const MatchedScoreTable& probe,
                             double last_threshold);

// run_cascade swept over a threshold grid. Equivalent to calling run_cascade
// per threshold, but walks every row through the stages once (the walk does
// not depend on the last threshold).
RocCurve empirical_roc(const CascadeModel& model, const MatchedScoreTable& probe,
                       const std::vector<double>& thresholds);

// Default grid: distinct probe scores of the given matcher plus sentinels.
std::vector<double> score_grid(const MatchedScoreTable& probe, const std::string& matcher);

// k evenly spaced thresholds spanning the curve's threshold range.
std::vector<double> uniform_grid(const RocCurve& curve, std::size_t k);

// Resamples both curves onto common grids by previous-point step
// interpolation: |dFAR| on the union of FRR values, |dFRR| on the union of
// FAR values, each clipped to the overlapping range.
DivergenceReport compare_rocs(const RocCurve& a, const RocCurve& b);

std::string run_result_to_json(const CascadeRunResult& result);
std::string divergence_to_json(const DivergenceReport& report);

}  // namespace cascal
