#include "cascal/roc.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "cascal/util.hpp"

namespace cascal {

namespace {

void require_both_classes(const ScoreSet& set) {
  if (set.genuine.empty() || set.impostor.empty()) {
    throw std::runtime_error("score set needs at least one genuine and one impostor score");
  }
}

double ratio(std::size_t count, std::size_t total) {
  return static_cast<double>(count) / static_cast<double>(total);
}

}  // namespace

double far_at(const ScoreSet& set, double threshold) {
  require_both_classes(set);
  std::size_t above = 0;
  for (double s : set.impostor) {
    if (s > threshold) ++above;
  }
  return ratio(above, set.impostor.size());
}

double frr_at(const ScoreSet& set, double threshold) {
  require_both_classes(set);
  std::size_t at_or_below = 0;
  for (double s : set.genuine) {
    if (s <= threshold) ++at_or_below;
  }
  return ratio(at_or_below, set.genuine.size());
}

RocCurve build_roc(const ScoreSet& set) {
  require_both_classes(set);
  std::vector<double> genuine = set.genuine;
  std::vector<double> impostor = set.impostor;
  std::sort(genuine.begin(), genuine.end());
  std::sort(impostor.begin(), impostor.end());

  std::vector<double> thresholds;
  thresholds.reserve(genuine.size() + impostor.size() + 2);
  const double lo = std::min(genuine.front(), impostor.front());
  const double hi = std::max(genuine.back(), impostor.back());
  thresholds.push_back(lo - 1.0);
  std::merge(genuine.begin(), genuine.end(), impostor.begin(), impostor.end(),
             std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.push_back(hi + 1.0);

  RocCurve curve;
  curve.points.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto imp_above =
        impostor.end() - std::upper_bound(impostor.begin(), impostor.end(), t);
    const auto gen_at_or_below =
        std::upper_bound(genuine.begin(), genuine.end(), t) - genuine.begin();
    curve.points.push_back({t, ratio(static_cast<std::size_t>(imp_above), impostor.size()),
                            ratio(static_cast<std::size_t>(gen_at_or_below), genuine.size())});
  }
  return curve;
}

OperationalPoint zero_frr_point(const ScoreSet& set) {
  require_both_classes(set);
  const double lower = *std::min_element(set.genuine.begin(), set.genuine.end());
  std::size_t at_or_above = 0;
  for (double s : set.impostor) {
    if (s >= lower) ++at_or_above;
  }
  OperationalPoint point;
  point.threshold = lower;
  point.far = ratio(at_or_above, set.impostor.size());
  point.frr = 0.0;
  point.kind = PointKind::zero_frr;
  return point;
}

OperationalPoint zero_far_point(const ScoreSet& set) {
  require_both_classes(set);
  const double upper = *std::max_element(set.impostor.begin(), set.impostor.end());
  std::size_t at_or_below = 0;
  for (double s : set.genuine) {
    if (s <= upper) ++at_or_below;
  }
  OperationalPoint point;
  point.threshold = upper;
  point.far = 0.0;
  point.frr = ratio(at_or_below, set.genuine.size());
  point.kind = PointKind::zero_far;
  return point;
}

double eer(const RocCurve& curve) {
  if (curve.points.empty()) throw std::runtime_error("eer of an empty curve");
  for (const auto& p : curve.points) {
    if (p.frr >= p.far) {
      return p.frr == p.far ? p.far : 0.5 * (p.far + p.frr);
    }
  }
  // far > frr everywhere cannot happen for full-span curves; fall back to the
  // closest point.
  const auto& last = curve.points.back();
  return 0.5 * (last.far + last.frr);
}

double auc(const RocCurve& curve) {
  if (curve.points.size() < 2) throw std::runtime_error("auc needs at least 2 points");
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const auto& a = curve.points[i];
    const auto& b = curve.points[i + 1];
    area += (a.far - b.far) * 0.5 * ((1.0 - a.frr) + (1.0 - b.frr));
  }
  return area;
}

double anchored_auc(const RocCurve& curve) {
  if (curve.points.empty()) throw std::runtime_error("auc of an empty curve");
  RocCurve extended;
  extended.points.reserve(curve.points.size() + 2);
  const auto& first = curve.points.front();
  extended.points.push_back({first.threshold - 1.0, 1.0, 0.0});
  extended.points.insert(extended.points.end(), curve.points.begin(), curve.points.end());
  const auto& last = curve.points.back();
  extended.points.push_back({last.threshold + 1.0, 0.0, 1.0});
  return auc(extended);
}

namespace {

const RocPoint* point_at_or_before(const RocCurve& curve, double threshold) {
  auto it = std::upper_bound(curve.points.begin(), curve.points.end(), threshold,
                             [](double t, const RocPoint& p) { return t < p.threshold; });
  if (it == curve.points.begin()) return nullptr;
  return &*(it - 1);
}

}  // namespace

double curve_far_at(const RocCurve& curve, double threshold) {
  const RocPoint* p = point_at_or_before(curve, threshold);
  return p ? p->far : 1.0;
}

double curve_frr_at(const RocCurve& curve, double threshold) {
  const RocPoint* p = point_at_or_before(curve, threshold);
  return p ? p->frr : 0.0;
}

void write_curve_csv(const RocCurve& curve, std::ostream& out) {
  out << "threshold,far,frr\n";
  for (const auto& p : curve.points) {
    out << format_double(p.threshold) << ',' << format_double(p.far) << ','
        << format_double(p.frr) << '\n';
  }
}

RocCurve parse_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty input, expected curve CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "threshold,far,frr") {
    throw std::runtime_error("line 1: expected header 'threshold,far,frr'");
  }
  RocCurve curve;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 3 fields");
    }
    const std::string ctx = "line " + std::to_string(line_no);
    curve.points.push_back({parse_double_strict(fields[0], ctx),
                            parse_double_strict(fields[1], ctx),
                            parse_double_strict(fields[2], ctx)});
  }
  return curve;
}

}  // namespace cascal
