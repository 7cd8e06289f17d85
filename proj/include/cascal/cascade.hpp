#pragma once

#include "cascal/roc.hpp"
#include "cascal/score_table.hpp"

namespace cascal {

// One non-final stage: reject below lower.threshold, accept above
// upper.threshold, forward in between. lower carries the zeroFRR value
// (impostor forward probability) in .far; upper carries the zeroFAR value
// (genuine forward probability) in .frr.
struct StageConfig {
  std::string matcher;
  OperationalPoint lower;  // kind zero_frr
  OperationalPoint upper;  // kind zero_far
  bool empty_region = false;       // lower.threshold > upper.threshold
  bool degenerate_overlap = false; // a forward probability of exactly 1
};

struct CascadeModel {
  std::vector<StageConfig> stages;  // matchers 1..N-1 in chain order
  std::string last_matcher;
  RocCurve last_roc;                // built from the last matcher's training scores
  std::string provenance;           // fingerprint of the training table
  std::vector<std::string> warnings;

  std::size_t chain_length() const { return stages.size() + 1; }
  std::vector<std::string> chain() const;
};

// Whole-system ROC predicted from the per-stage forward probabilities:
// far = g_factor * FAR_last(t), frr = h_factor * FRR_last(t), with
// g_factor / h_factor the products of the stage zeroFRR / zeroFAR values.
struct PredictedRoc {
  std::vector<RocPoint> points;
  double g_factor = 1.0;
  double h_factor = 1.0;
};

struct MatcherMetrics {
  std::string name;
  double auc = 0.0;
  double eer = 0.0;
};

struct RankedChain {
  std::vector<std::string> chain;
  double predicted_auc = 0.0;
  double g_factor = 1.0;
  double h_factor = 1.0;
};

CascadeModel calibrate(const MatchedScoreTable& train, const std::vector<std::string>& chain);

PredictedRoc predict_roc(const CascadeModel& model);

RocCurve to_curve(const PredictedRoc& prediction);

// anchored_auc of the predicted curve; the scalar used for chain ranking.
double predicted_auc(const PredictedRoc& prediction);

std::vector<MatcherMetrics> matcher_metrics(const MatchedScoreTable& table);

// Ascending order of performance, so the best matcher lands last. Primary key
// auc (higher is better), tie-break eer (lower is better), then name.
std::vector<std::string> heuristic_order(std::vector<MatcherMetrics> metrics);

// All ordered selections without repetition, in lexicographic order of the
// sorted matcher names. Count = n! / (n - length)!.
std::vector<std::vector<std::string>> enumerate_chains(std::vector<std::string> matchers,
                                                       std::size_t length);

// calibrate + predict per chain, ranked by predicted_auc descending with a
// lexicographic tie-break on the chain key.
std::vector<RankedChain> rank_chains(const MatchedScoreTable& train,
                                     const std::vector<std::vector<std::string>>& chains);

std::string chain_key(const std::vector<std::string>& chain);  // "a>b>c"

std::string model_to_json(const CascadeModel& model);
CascadeModel model_from_json(const std::string& text);

std::string table_fingerprint(const MatchedScoreTable& table);

}  // namespace cascal
