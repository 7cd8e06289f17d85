#pragma once

#include <iosfwd>

#include "cascal/cascade.hpp"

namespace cascal {

enum class Sign { plus, minus, both };

// Per-stage probe-vs-training deviations measured at the stored thresholds.
struct StageErrorEstimate {
  std::string matcher;
  double frr_leak_at_lower = 0.0;  // probe genuine mass strictly below lower
  double far_leak_at_upper = 0.0;  // probe impostor mass strictly above upper
  double probe_zero_frr = 0.0;     // probe impostor mass >= lower
  double probe_zero_far = 0.0;     // probe genuine mass <= upper
  double dev_zero_frr = 0.0;       // probe_zero_frr - stored zeroFRR (signed)
  double dev_zero_far = 0.0;       // probe_zero_far - stored zeroFAR (signed)
};

// alpha displaces the zeroFAR/zeroFRR rate values, epsilon is the residual
// error rate at the estimated thresholds; both are < 1. When
// alpha_is_relative is set, alpha holds a fraction rho and the effective
// per-stage displacement is rho * (that stage's stored zero value). When
// per_stage is non-empty (filled by estimate_params), delta_roc uses the
// signed per-stage deviations instead of the scalar alpha.
struct ErrorParams {
  double alpha = 0.0;
  double epsilon = 0.0;
  Sign sign = Sign::plus;
  bool alpha_is_relative = false;
  std::vector<StageErrorEstimate> per_stage;
};

struct PerturbedPoint {
  OperationalPoint point;
  bool clamped = false;
};

struct BandPoint {
  double threshold = 0.0;
  double far = 0.0, far_low = 0.0, far_high = 0.0;
  double frr = 0.0, frr_low = 0.0, frr_high = 0.0;
  bool clamped = false;
};

struct ErrorBand {
  std::vector<BandPoint> points;
  ErrorParams params;
};

struct RocDelta {
  double delta_far = 0.0;
  double delta_frr = 0.0;
};

// Displaced operational point: a zeroFRR point becomes (far = zeroFRR +- alpha,
// frr = epsilon); a zeroFAR point becomes (far = epsilon, frr = zeroFAR +- alpha).
// Results are clamped to [0, 1] with the clamp flagged. Generic points are
// rejected.
PerturbedPoint perturb_point(const OperationalPoint& point, const ErrorParams& params,
                             Sign sign);

// First-order predicted-ROC displacement at a last-stage threshold. For a
// two-matcher chain this is exactly
//   dFAR = +-alpha * FAR_last(t) + epsilon,
//   dFRR = +-alpha * FRR_last(t) + epsilon;
// for longer chains each stage contributes its displacement scaled by the
// product of the other stages' forward probabilities. Sign `both` is treated
// as plus here; band() is the consumer that sweeps both signs.
RocDelta delta_roc(const CascadeModel& model, const ErrorParams& params, double last_threshold);

// Worst-case displacement interval around every predicted point, clamped to
// [0, 1]: half-width = sum_j |alpha_j| * (prod of other stages' zero values)
// * rate_last(t) + epsilon, applied symmetrically.
ErrorBand band(const PredictedRoc& prediction, const CascadeModel& model,
               const ErrorParams& params);

// Fits alpha / epsilon on a probe set: epsilon is the mean stage leakage at
// the stored thresholds, alpha the mean absolute deviation between stored and
// probe-recomputed forward probabilities. Per-stage raw values are kept in
// per_stage; sign reflects the mean signed deviation.
ErrorParams estimate_params(const CascadeModel& model, const MatchedScoreTable& probe);

// Predicted curve displaced by delta_roc at every point, clamped to [0, 1].
RocCurve corrected_roc(const PredictedRoc& prediction, const CascadeModel& model,
                       const ErrorParams& params);

void write_band_csv(const ErrorBand& band, std::ostream& out);

std::string params_to_json(const ErrorParams& params);
ErrorParams params_from_json(const std::string& text);

}  // namespace cascal
