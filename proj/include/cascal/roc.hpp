#pragma once

#include <iosfwd>

#include "cascal/score_table.hpp"

namespace cascal {

// Tie conventions used everywhere in this project (and pinned by tests):
//   accept  iff score >  threshold   (FAR counts strict >)
//   reject  iff score <= threshold   at the final stage (FRR counts <=)
//   forward iff lower <= score <= upper at intermediate stages.
// All rates are exact count ratios realized by the sample.

struct RocPoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
};

// Empirical ROC as a step function: points sorted by threshold ascending,
// far non-increasing, frr non-decreasing. Curves built by build_roc span the
// full (1,0)..(0,1) range via sentinel thresholds; cascade-level curves may
// cover a sub-range (early stages absorb part of the traffic).
struct RocCurve {
  std::vector<RocPoint> points;
};

enum class PointKind { generic, zero_frr, zero_far };

struct OperationalPoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
  PointKind kind = PointKind::generic;
};

// FAR(t) = |{impostor s : s > t}| / |impostor|
double far_at(const ScoreSet& set, double threshold);

// FRR(t) = |{genuine s : s <= t}| / |genuine|
double frr_at(const ScoreSet& set, double threshold);

// One point per distinct score plus sentinels below min and above max.
RocCurve build_roc(const ScoreSet& set);

// Lower threshold at the minimum genuine score: with the strict `<` reject
// rule no genuine sample falls below it, so frr == 0 by construction. The
// stored far is the impostor mass at or above the threshold, i.e. the exact
// impostor forward probability of a stage calibrated at this point.
OperationalPoint zero_frr_point(const ScoreSet& set);

// Upper threshold at the maximum impostor score: far == 0 by construction,
// frr is the genuine mass at or below the threshold (the exact genuine
// forward probability).
OperationalPoint zero_far_point(const ScoreSet& set);

// Crossing of the far/frr step functions; when no threshold gives an exact
// tie, the midpoint (far + frr) / 2 at the first threshold with frr >= far.
double eer(const RocCurve& curve);

// Trapezoidal area under (far, 1 - frr) over the stored points.
double auc(const RocCurve& curve);

// auc() after prepending an accept-all anchor (1, 0) and appending a
// reject-all anchor (0, 1). Identical to auc() for full-span curves; required
// to compare cascade-level curves (which reach neither corner) against
// single-matcher curves on the same scale.
double anchored_auc(const RocCurve& curve);

// Step-function lookup: value of the last stored point with threshold <= t;
// (far, frr) = (1, 0) below the first point.
double curve_far_at(const RocCurve& curve, double threshold);
double curve_frr_at(const RocCurve& curve, double threshold);

void write_curve_csv(const RocCurve& curve, std::ostream& out);
RocCurve parse_curve_csv(std::istream& in);

}  // namespace cascal
