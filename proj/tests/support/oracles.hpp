#pragma once

// Independent reference computations used to freeze expected values. These
// deliberately use different algorithms than the library (full rescans,
// pairwise enumeration, raw-moment formulas) so that agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <vector>

#include "cascal/roc.hpp"
#include "cascal/score_table.hpp"

namespace oracles {

// O(n^2) threshold enumeration: one full rescan of both classes per distinct
// score value, no sorting or prefix tricks.
inline cascal::RocCurve brute_force_roc(const cascal::ScoreSet& set) {
  std::vector<double> thresholds;
  thresholds.insert(thresholds.end(), set.genuine.begin(), set.genuine.end());
  thresholds.insert(thresholds.end(), set.impostor.begin(), set.impostor.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  cascal::RocCurve curve;
  for (double t : thresholds) {
    std::size_t imp_above = 0;
    for (double s : set.impostor) {
      if (s > t) ++imp_above;
    }
    std::size_t gen_at_or_below = 0;
    for (double s : set.genuine) {
      if (s <= t) ++gen_at_or_below;
    }
    curve.points.push_back({t,
                            static_cast<double>(imp_above) / set.impostor.size(),
                            static_cast<double>(gen_at_or_below) / set.genuine.size()});
  }
  return curve;
}

// Pairwise comparison statistic P(genuine > impostor) with ties counted 1/2.
inline double mann_whitney_auc(const cascal::ScoreSet& set) {
  double wins = 0.0;
  for (double g : set.genuine) {
    for (double i : set.impostor) {
      if (g > i) wins += 1.0;
      else if (g == i) wins += 0.5;
    }
  }
  return wins / (static_cast<double>(set.genuine.size()) *
                 static_cast<double>(set.impostor.size()));
}

// Raw-moment Pearson formula (textbook single-pass form), as opposed to the
// centered two-pass sums in the library.
inline double pearson_direct(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    syy += ys[i] * ys[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

}  // namespace oracles
