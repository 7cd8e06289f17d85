#pragma once

// Shared synthetic fixtures for tests. The bounded mixture family below keeps
// the population zeroFRR / zeroFAR values and the matcher strength separately
// tunable: sample minima/maxima converge onto the fixed support edges, so the
// calibrated forward probabilities concentrate tightly around known
// population values regardless of matcher strength.

#include <cstdint>
#include <string>
#include <vector>

#include "cascal/rng.hpp"
#include "cascal/score_table.hpp"

namespace fixtures {

// Impostor scores uniform on [imp_lo, imp_hi]. Genuine scores are a mixture:
//   floor  U[floor_lo, floor_lo + floor_w]   w.p. floor_p  (pins the minimum)
//   bulk   U[bulk_lo,  bulk_lo  + bulk_w]    w.p. bulk_p   (confusable mass)
//   clear  U[clear_lo, clear_hi]             otherwise     (above all impostors)
// Population values: zeroFRR = imp mass >= floor_lo, zeroFAR = floor_p + bulk_p.
// Raising bulk_lo makes the matcher stronger without moving either zero value.
struct MixtureMatcher {
  double imp_lo = 0.0, imp_hi = 1.0;
  double floor_lo = 0.5, floor_w = 0.1, floor_p = 0.05;
  double bulk_lo = 0.55, bulk_w = 0.1, bulk_p = 0.30;
  double clear_lo = 1.1, clear_hi = 2.0;

  double pop_zero_frr() const { return (imp_hi - floor_lo) / (imp_hi - imp_lo); }
  double pop_zero_far() const { return floor_p + bulk_p; }

  double draw_impostor(cascal::Rng& rng) const {
    return imp_lo + (imp_hi - imp_lo) * rng.uniform01();
  }
  double draw_genuine(cascal::Rng& rng) const {
    const double pick = rng.uniform01();
    const double u = rng.uniform01();
    if (pick < floor_p) return floor_lo + floor_w * u;
    if (pick < floor_p + bulk_p) return bulk_lo + bulk_w * u;
    return clear_lo + (clear_hi - clear_lo) * u;
  }
};

// Independent draws per matcher (identity correlation by construction).
inline cascal::MatchedScoreTable mixture_table(const std::vector<MixtureMatcher>& matchers,
                                               std::size_t n_genuine, std::size_t n_impostor,
                                               std::uint64_t seed) {
  cascal::MatchedScoreTable table;
  for (std::size_t i = 0; i < matchers.size(); ++i) {
    table.matcher_names.push_back("m" + std::to_string(i + 1));
  }
  cascal::Rng rng(seed);
  table.rows.reserve(n_genuine + n_impostor);
  for (std::size_t r = 0; r < n_genuine; ++r) {
    cascal::ScoreRow row;
    row.id = "g" + std::to_string(r + 1);
    row.label = cascal::Label::genuine;
    for (const auto& m : matchers) row.scores.push_back(m.draw_genuine(rng));
    table.rows.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < n_impostor; ++r) {
    cascal::ScoreRow row;
    row.id = "i" + std::to_string(r + 1);
    row.label = cascal::Label::impostor;
    for (const auto& m : matchers) row.scores.push_back(m.draw_impostor(rng));
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Three matchers with identical zero values but distinct strengths
// (bulk height drives separability).
inline std::vector<MixtureMatcher> three_distinct_matchers() {
  MixtureMatcher weak;
  weak.bulk_lo = 0.20;
  MixtureMatcher mid;
  mid.bulk_lo = 0.55;
  MixtureMatcher strong;
  strong.bulk_lo = 0.85;
  return {weak, mid, strong};
}

// Affine map applied to one matcher's impostor scores; used to fake a probe
// distribution drift.
inline void drift_impostor_scores(cascal::MatchedScoreTable& table, const std::string& matcher,
                                  double shift, double scale) {
  const std::size_t col = table.matcher_index(matcher);
  for (auto& row : table.rows) {
    if (row.label == cascal::Label::impostor) {
      row.scores[col] = shift + scale * row.scores[col];
    }
  }
}

inline cascal::ScoreSet make_set(std::vector<double> genuine, std::vector<double> impostor) {
  cascal::ScoreSet set;
  set.genuine = std::move(genuine);
  set.impostor = std::move(impostor);
  return set;
}

// Gaussian two-class spec helper for correlation studies.
inline cascal::SynthSpec gaussian_spec(std::size_t n_matchers, double genuine_mean,
                                       double correlation, std::size_t n_genuine,
                                       std::size_t n_impostor) {
  cascal::SynthSpec spec;
  for (std::size_t i = 0; i < n_matchers; ++i) {
    spec.matchers.push_back("m" + std::to_string(i + 1));
  }
  spec.genuine.mean.assign(n_matchers, genuine_mean);
  spec.genuine.stddev.assign(n_matchers, 1.0);
  spec.impostor.mean.assign(n_matchers, 0.0);
  spec.impostor.stddev.assign(n_matchers, 1.0);
  spec.correlation.assign(n_matchers, std::vector<double>(n_matchers, correlation));
  for (std::size_t i = 0; i < n_matchers; ++i) spec.correlation[i][i] = 1.0;
  spec.n_genuine = n_genuine;
  spec.n_impostor = n_impostor;
  return spec;
}

}  // namespace fixtures
