#include "cascal/cascade.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cascal/util.hpp"
#include "json.hpp"

namespace cascal {

namespace {

constexpr std::size_t kSmallSampleWarning = 30;

void check_chain(const MatchedScoreTable& train, const std::vector<std::string>& chain) {
  if (chain.size() < 2) throw std::runtime_error("chain needs at least 2 matchers");
  std::set<std::string> seen;
  for (const auto& name : chain) {
    train.matcher_index(name);  // throws on unknown matcher
    if (!seen.insert(name).second) {
      throw std::runtime_error("matcher '" + name + "' appears twice in the chain");
    }
  }
  if (train.count(Label::genuine) == 0 || train.count(Label::impostor) == 0) {
    throw std::runtime_error("training table needs both genuine and impostor rows");
  }
}

}  // namespace

std::vector<std::string> CascadeModel::chain() const {
  std::vector<std::string> names;
  names.reserve(stages.size() + 1);
  for (const auto& stage : stages) names.push_back(stage.matcher);
  names.push_back(last_matcher);
  return names;
}

std::string table_fingerprint(const MatchedScoreTable& table) {
  // FNV-1a over the canonical CSV serialization.
  std::ostringstream buffer;
  write_score_table(table, buffer);
  const std::string bytes = buffer.str();
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char out[17];
  static const char digits[] = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  out[16] = '\0';
  return std::string(out);
}

CascadeModel calibrate(const MatchedScoreTable& train, const std::vector<std::string>& chain) {
  check_chain(train, chain);
  CascadeModel model;
  const std::size_t n_genuine = train.count(Label::genuine);
  const std::size_t n_impostor = train.count(Label::impostor);
  if (n_genuine < kSmallSampleWarning || n_impostor < kSmallSampleWarning) {
    model.warnings.push_back("small training sample (" + std::to_string(n_genuine) +
                             " genuine / " + std::to_string(n_impostor) +
                             " impostor rows); operational points may be unstable");
  }

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const ScoreSet column = column_score_set(train, chain[i]);
    StageConfig stage;
    stage.matcher = chain[i];
    stage.lower = zero_frr_point(column);
    stage.upper = zero_far_point(column);
    stage.empty_region = stage.lower.threshold > stage.upper.threshold;
    stage.degenerate_overlap = stage.lower.far == 1.0 || stage.upper.frr == 1.0;
    if (stage.degenerate_overlap) {
      model.warnings.push_back("stage '" + stage.matcher +
                               "' is degenerate (a forward probability equals 1); it does not "
                               "reduce the predicted error");
    }
    model.stages.push_back(std::move(stage));
  }
  model.last_matcher = chain.back();
  model.last_roc = build_roc(column_score_set(train, model.last_matcher));
  model.provenance = table_fingerprint(train);
  return model;
}

namespace {

// Accumulated in ascending value order so that stage permutations produce
// bit-identical factors (floating-point products are not reassociation-safe).
double ordered_product(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double product = 1.0;
  for (double v : values) product *= v;
  return product;
}

}  // namespace

PredictedRoc predict_roc(const CascadeModel& model) {
  PredictedRoc prediction;
  std::vector<double> zero_frrs, zero_fars;
  for (const auto& stage : model.stages) {
    zero_frrs.push_back(stage.lower.far);  // zeroFRR_i
    zero_fars.push_back(stage.upper.frr);  // zeroFAR_i
  }
  prediction.g_factor = ordered_product(std::move(zero_frrs));
  prediction.h_factor = ordered_product(std::move(zero_fars));
  prediction.points.reserve(model.last_roc.points.size());
  for (const auto& p : model.last_roc.points) {
    prediction.points.push_back(
        {p.threshold, prediction.g_factor * p.far, prediction.h_factor * p.frr});
  }
  return prediction;
}

RocCurve to_curve(const PredictedRoc& prediction) {
  RocCurve curve;
  curve.points = prediction.points;
  return curve;
}

double predicted_auc(const PredictedRoc& prediction) { return anchored_auc(to_curve(prediction)); }

std::vector<MatcherMetrics> matcher_metrics(const MatchedScoreTable& table) {
  std::vector<MatcherMetrics> metrics;
  metrics.reserve(table.matcher_names.size());
  for (const auto& name : table.matcher_names) {
    const RocCurve curve = build_roc(column_score_set(table, name));
    metrics.push_back({name, auc(curve), eer(curve)});
  }
  return metrics;
}

std::vector<std::string> heuristic_order(std::vector<MatcherMetrics> metrics) {
  if (metrics.size() < 2) throw std::runtime_error("heuristic order needs at least 2 matchers");
  std::sort(metrics.begin(), metrics.end(), [](const MatcherMetrics& a, const MatcherMetrics& b) {
    if (a.auc != b.auc) return a.auc < b.auc;  // worse matcher first
    if (a.eer != b.eer) return a.eer > b.eer;
    return a.name < b.name;
  });
  std::vector<std::string> order;
  order.reserve(metrics.size());
  for (const auto& m : metrics) order.push_back(m.name);
  return order;
}

std::vector<std::vector<std::string>> enumerate_chains(std::vector<std::string> matchers,
                                                       std::size_t length) {
  if (length < 2 || length > matchers.size()) {
    throw std::runtime_error("chain length must lie in [2, " +
                             std::to_string(matchers.size()) + "]");
  }
  std::sort(matchers.begin(), matchers.end());
  std::vector<std::vector<std::string>> chains;
  std::vector<std::string> current;
  std::vector<bool> used(matchers.size(), false);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == length) {
      chains.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < matchers.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(matchers[i]);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  extend(extend);
  return chains;
}

std::string chain_key(const std::vector<std::string>& chain) { return join(chain, ">"); }

std::vector<RankedChain> rank_chains(const MatchedScoreTable& train,
                                     const std::vector<std::vector<std::string>>& chains) {
  std::vector<RankedChain> ranked;
  ranked.reserve(chains.size());
  for (const auto& chain : chains) {
    const CascadeModel model = calibrate(train, chain);
    const PredictedRoc prediction = predict_roc(model);
    ranked.push_back({chain, predicted_auc(prediction), prediction.g_factor,
                      prediction.h_factor});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedChain& a, const RankedChain& b) {
    if (a.predicted_auc != b.predicted_auc) return a.predicted_auc > b.predicted_auc;
    return chain_key(a.chain) < chain_key(b.chain);
  });
  return ranked;
}

namespace {

nlohmann::json point_to_json(const OperationalPoint& point) {
  return {{"threshold", point.threshold}, {"far", point.far}, {"frr", point.frr}};
}

OperationalPoint point_from_json(const nlohmann::json& doc, PointKind kind) {
  OperationalPoint point;
  point.threshold = doc.at("threshold").get<double>();
  point.far = doc.at("far").get<double>();
  point.frr = doc.at("frr").get<double>();
  point.kind = kind;
  return point;
}

}  // namespace

std::string model_to_json(const CascadeModel& model) {
  nlohmann::json doc;
  doc["format"] = "cascal-model/1";
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& stage : model.stages) {
    stages.push_back({{"matcher", stage.matcher},
                      {"lower", point_to_json(stage.lower)},
                      {"upper", point_to_json(stage.upper)},
                      {"empty_region", stage.empty_region},
                      {"degenerate_overlap", stage.degenerate_overlap}});
  }
  doc["stages"] = stages;
  doc["last_matcher"] = model.last_matcher;
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& p : model.last_roc.points) {
    curve.push_back({p.threshold, p.far, p.frr});
  }
  doc["last_roc"] = curve;
  doc["provenance"] = model.provenance;
  doc["warnings"] = model.warnings;
  return doc.dump(2) + "\n";
}

CascadeModel model_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("model: invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "cascal-model/1") {
      throw std::runtime_error("model: unsupported format '" +
                               doc["format"].get<std::string>() + "'");
    }
    CascadeModel model;
    for (const auto& item : doc.at("stages")) {
      StageConfig stage;
      stage.matcher = item.at("matcher").get<std::string>();
      stage.lower = point_from_json(item.at("lower"), PointKind::zero_frr);
      stage.upper = point_from_json(item.at("upper"), PointKind::zero_far);
      stage.empty_region = item.at("empty_region").get<bool>();
      stage.degenerate_overlap = item.at("degenerate_overlap").get<bool>();
      model.stages.push_back(std::move(stage));
    }
    model.last_matcher = doc.at("last_matcher").get<std::string>();
    for (const auto& p : doc.at("last_roc")) {
      model.last_roc.points.push_back(
          {p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
    }
    model.provenance = doc.value("provenance", std::string());
    model.warnings = doc.value("warnings", std::vector<std::string>());
    if (model.stages.empty()) throw std::runtime_error("model: no stages");
    if (model.last_roc.points.empty()) throw std::runtime_error("model: empty last-stage curve");
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("model: ") + e.what());
  }
}

}  // namespace cascal
