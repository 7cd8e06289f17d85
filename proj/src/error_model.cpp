#include "cascal/error_model.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cascal/util.hpp"
#include "json.hpp"

namespace cascal {

namespace {

void check_params(const ErrorParams& params) {
  if (params.alpha < 0.0 || params.alpha >= 1.0 || params.epsilon < 0.0 ||
      params.epsilon >= 1.0) {
    throw std::runtime_error("alpha and epsilon must lie in [0, 1)");
  }
}

double sign_value(Sign sign) { return sign == Sign::minus ? -1.0 : 1.0; }

// Effective signed displacement of stage i's zeroFRR (far_side) or zeroFAR
// value under the given params.
double stage_alpha(const ErrorParams& params, const CascadeModel& model, std::size_t i,
                   bool far_side) {
  if (!params.per_stage.empty()) {
    if (params.per_stage.size() != model.stages.size()) {
      throw std::runtime_error("per-stage estimates do not match the model's stage count");
    }
    return far_side ? params.per_stage[i].dev_zero_frr : params.per_stage[i].dev_zero_far;
  }
  const double zero =
      far_side ? model.stages[i].lower.far : model.stages[i].upper.frr;
  const double magnitude = params.alpha_is_relative ? params.alpha * zero : params.alpha;
  return sign_value(params.sign) * magnitude;
}

// Product of all stages' zero values except stage j.
double factor_excluding(const CascadeModel& model, std::size_t j, bool far_side) {
  double product = 1.0;
  for (std::size_t i = 0; i < model.stages.size(); ++i) {
    if (i == j) continue;
    product *= far_side ? model.stages[i].lower.far : model.stages[i].upper.frr;
  }
  return product;
}

}  // namespace

PerturbedPoint perturb_point(const OperationalPoint& point, const ErrorParams& params,
                             Sign sign) {
  check_params(params);
  if (point.kind == PointKind::generic) {
    throw std::runtime_error("perturb_point requires a zeroFRR or zeroFAR point");
  }
  if (sign == Sign::both) throw std::runtime_error("perturb_point needs a definite sign");
  const double s = sign_value(sign);
  PerturbedPoint result;
  result.point = point;
  if (point.kind == PointKind::zero_frr) {
    const double displaced = point.far + s * params.alpha;
    result.point.far = clamp01(displaced);
    result.point.frr = clamp01(params.epsilon);
    result.clamped = displaced != result.point.far;
  } else {
    const double displaced = point.frr + s * params.alpha;
    result.point.frr = clamp01(displaced);
    result.point.far = clamp01(params.epsilon);
    result.clamped = displaced != result.point.frr;
  }
  return result;
}

RocDelta delta_roc(const CascadeModel& model, const ErrorParams& params, double last_threshold) {
  check_params(params);
  const double far_last = curve_far_at(model.last_roc, last_threshold);
  const double frr_last = curve_frr_at(model.last_roc, last_threshold);
  RocDelta delta;
  for (std::size_t j = 0; j < model.stages.size(); ++j) {
    delta.delta_far += stage_alpha(params, model, j, true) * factor_excluding(model, j, true) *
                       far_last;
    delta.delta_frr += stage_alpha(params, model, j, false) *
                       factor_excluding(model, j, false) * frr_last;
  }
  delta.delta_far += params.epsilon;
  delta.delta_frr += params.epsilon;
  return delta;
}

ErrorBand band(const PredictedRoc& prediction, const CascadeModel& model,
               const ErrorParams& params) {
  check_params(params);
  ErrorBand out;
  out.params = params;
  out.points.reserve(prediction.points.size());
  for (const auto& p : prediction.points) {
    const double far_last = curve_far_at(model.last_roc, p.threshold);
    const double frr_last = curve_frr_at(model.last_roc, p.threshold);
    double far_halfwidth = params.epsilon;
    double frr_halfwidth = params.epsilon;
    for (std::size_t j = 0; j < model.stages.size(); ++j) {
      far_halfwidth += std::abs(stage_alpha(params, model, j, true)) *
                       factor_excluding(model, j, true) * far_last;
      frr_halfwidth += std::abs(stage_alpha(params, model, j, false)) *
                       factor_excluding(model, j, false) * frr_last;
    }
    BandPoint bp;
    bp.threshold = p.threshold;
    bp.far = p.far;
    bp.frr = p.frr;
    bp.far_low = clamp01(p.far - far_halfwidth);
    bp.far_high = clamp01(p.far + far_halfwidth);
    bp.frr_low = clamp01(p.frr - frr_halfwidth);
    bp.frr_high = clamp01(p.frr + frr_halfwidth);
    bp.clamped = bp.far_low != p.far - far_halfwidth || bp.far_high != p.far + far_halfwidth ||
                 bp.frr_low != p.frr - frr_halfwidth || bp.frr_high != p.frr + frr_halfwidth;
    out.points.push_back(bp);
  }
  return out;
}

ErrorParams estimate_params(const CascadeModel& model, const MatchedScoreTable& probe) {
  if (probe.count(Label::genuine) == 0 || probe.count(Label::impostor) == 0) {
    throw std::runtime_error("probe table needs both genuine and impostor rows");
  }
  ErrorParams params;
  double leak_sum = 0.0;
  double dev_abs_sum = 0.0;
  double dev_signed_sum = 0.0;
  for (const auto& stage : model.stages) {
    const ScoreSet column = column_score_set(probe, stage.matcher);
    StageErrorEstimate est;
    est.matcher = stage.matcher;

    std::size_t gen_below = 0, gen_at_or_below_upper = 0;
    for (double s : column.genuine) {
      if (s < stage.lower.threshold) ++gen_below;
      if (s <= stage.upper.threshold) ++gen_at_or_below_upper;
    }
    std::size_t imp_above = 0, imp_at_or_above_lower = 0;
    for (double s : column.impostor) {
      if (s > stage.upper.threshold) ++imp_above;
      if (s >= stage.lower.threshold) ++imp_at_or_above_lower;
    }
    const double n_gen = static_cast<double>(column.genuine.size());
    const double n_imp = static_cast<double>(column.impostor.size());
    est.frr_leak_at_lower = gen_below / n_gen;
    est.far_leak_at_upper = imp_above / n_imp;
    est.probe_zero_frr = imp_at_or_above_lower / n_imp;
    est.probe_zero_far = gen_at_or_below_upper / n_gen;
    est.dev_zero_frr = est.probe_zero_frr - stage.lower.far;
    est.dev_zero_far = est.probe_zero_far - stage.upper.frr;

    leak_sum += est.frr_leak_at_lower + est.far_leak_at_upper;
    dev_abs_sum += std::abs(est.dev_zero_frr) + std::abs(est.dev_zero_far);
    dev_signed_sum += est.dev_zero_frr + est.dev_zero_far;
    params.per_stage.push_back(std::move(est));
  }
  const double n_values = 2.0 * static_cast<double>(model.stages.size());
  params.epsilon = leak_sum / n_values;
  params.alpha = dev_abs_sum / n_values;
  params.sign = dev_signed_sum >= 0.0 ? Sign::plus : Sign::minus;
  return params;
}

RocCurve corrected_roc(const PredictedRoc& prediction, const CascadeModel& model,
                       const ErrorParams& params) {
  RocCurve curve;
  curve.points.reserve(prediction.points.size());
  for (const auto& p : prediction.points) {
    const RocDelta delta = delta_roc(model, params, p.threshold);
    curve.points.push_back(
        {p.threshold, clamp01(p.far + delta.delta_far), clamp01(p.frr + delta.delta_frr)});
  }
  return curve;
}

void write_band_csv(const ErrorBand& band, std::ostream& out) {
  out << "threshold,far,far_low,far_high,frr,frr_low,frr_high\n";
  for (const auto& p : band.points) {
    out << format_double(p.threshold) << ',' << format_double(p.far) << ','
        << format_double(p.far_low) << ',' << format_double(p.far_high) << ','
        << format_double(p.frr) << ',' << format_double(p.frr_low) << ','
        << format_double(p.frr_high) << '\n';
  }
}

namespace {

std::string sign_name(Sign sign) {
  switch (sign) {
    case Sign::plus: return "plus";
    case Sign::minus: return "minus";
    default: return "both";
  }
}

Sign sign_from_name(const std::string& name) {
  if (name == "plus") return Sign::plus;
  if (name == "minus") return Sign::minus;
  if (name == "both") return Sign::both;
  throw std::runtime_error("unknown sign '" + name + "'");
}

}  // namespace

std::string params_to_json(const ErrorParams& params) {
  nlohmann::json doc;
  doc["format"] = "cascal-params/1";
  doc["alpha"] = params.alpha;
  doc["epsilon"] = params.epsilon;
  doc["sign"] = sign_name(params.sign);
  doc["alpha_is_relative"] = params.alpha_is_relative;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& est : params.per_stage) {
    stages.push_back({{"matcher", est.matcher},
                      {"frr_leak_at_lower", est.frr_leak_at_lower},
                      {"far_leak_at_upper", est.far_leak_at_upper},
                      {"probe_zero_frr", est.probe_zero_frr},
                      {"probe_zero_far", est.probe_zero_far},
                      {"dev_zero_frr", est.dev_zero_frr},
                      {"dev_zero_far", est.dev_zero_far}});
  }
  doc["per_stage"] = stages;
  return doc.dump(2) + "\n";
}

ErrorParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("params: invalid JSON: ") + e.what());
  }
  try {
    ErrorParams params;
    params.alpha = doc.at("alpha").get<double>();
    params.epsilon = doc.at("epsilon").get<double>();
    params.sign = sign_from_name(doc.value("sign", "plus"));
    params.alpha_is_relative = doc.value("alpha_is_relative", false);
    if (doc.contains("per_stage")) {
      for (const auto& item : doc["per_stage"]) {
        StageErrorEstimate est;
        est.matcher = item.at("matcher").get<std::string>();
        est.frr_leak_at_lower = item.at("frr_leak_at_lower").get<double>();
        est.far_leak_at_upper = item.at("far_leak_at_upper").get<double>();
        est.probe_zero_frr = item.at("probe_zero_frr").get<double>();
        est.probe_zero_far = item.at("probe_zero_far").get<double>();
        est.dev_zero_frr = item.at("dev_zero_frr").get<double>();
        est.dev_zero_far = item.at("dev_zero_far").get<double>();
        params.per_stage.push_back(std::move(est));
      }
    }
    check_params(params);
    return params;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("params: ") + e.what());
  }
}

}  // namespace cascal
