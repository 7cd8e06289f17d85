#include "cascal/score_table.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cascal/rng.hpp"
#include "cascal/util.hpp"
#include "json.hpp"

namespace cascal {

std::size_t MatchedScoreTable::matcher_index(const std::string& name) const {
  for (std::size_t i = 0; i < matcher_names.size(); ++i) {
    if (matcher_names[i] == name) return i;
  }
  throw std::runtime_error("unknown matcher '" + name + "'");
}

std::size_t MatchedScoreTable::count(Label label) const {
  std::size_t n = 0;
  for (const auto& row : rows) {
    if (row.label == label) ++n;
  }
  return n;
}

void MatchedScoreTable::validate() const {
  std::set<std::string> seen;
  for (const auto& name : matcher_names) {
    if (name.empty()) throw std::runtime_error("empty matcher name");
    if (!seen.insert(name).second) {
      throw std::runtime_error("duplicate matcher name '" + name + "'");
    }
  }
  for (const auto& row : rows) {
    if (row.scores.size() != matcher_names.size()) {
      throw std::runtime_error("row '" + row.id + "': score count " +
                               std::to_string(row.scores.size()) + " != matcher count " +
                               std::to_string(matcher_names.size()));
    }
    for (double s : row.scores) {
      if (!std::isfinite(s)) {
        throw std::runtime_error("row '" + row.id + "': non-finite score");
      }
    }
  }
}

namespace {

std::string line_ctx(std::size_t line_no) { return "line " + std::to_string(line_no); }

}  // namespace

MatchedScoreTable parse_score_table(std::istream& in) {
  MatchedScoreTable table;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw std::runtime_error("empty input, expected CSV header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "id" || header[1] != "label") {
    throw std::runtime_error(line_ctx(line_no) +
                             ": malformed header, expected 'id,label,<matcher>,...'");
  }
  table.matcher_names.assign(header.begin() + 2, header.end());

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error(line_ctx(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    ScoreRow row;
    row.id = fields[0];
    if (fields[1] == "1") {
      row.label = Label::genuine;
    } else if (fields[1] == "0") {
      row.label = Label::impostor;
    } else {
      throw std::runtime_error(line_ctx(line_no) + ": unknown label '" + fields[1] +
                               "' (expected 1 or 0)");
    }
    row.scores.reserve(table.matcher_names.size());
    for (std::size_t i = 2; i < fields.size(); ++i) {
      row.scores.push_back(parse_double_strict(fields[i], line_ctx(line_no)));
    }
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

void write_score_table(const MatchedScoreTable& table, std::ostream& out) {
  for (const auto& name : table.matcher_names) {
    if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos) {
      throw std::runtime_error("matcher name '" + name + "' not representable in CSV");
    }
  }
  out << "id,label";
  for (const auto& name : table.matcher_names) out << ',' << name;
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.id.find(',') != std::string::npos || row.id.find('\n') != std::string::npos) {
      throw std::runtime_error("row id '" + row.id + "' not representable in CSV");
    }
    out << row.id << ',' << (row.label == Label::genuine ? '1' : '0');
    for (double s : row.scores) out << ',' << format_double(s);
    out << '\n';
  }
}

std::pair<MatchedScoreTable, MatchedScoreTable> split_table(const MatchedScoreTable& table,
                                                            std::size_t n_genuine_train,
                                                            std::size_t n_impostor_train,
                                                            std::uint64_t seed) {
  std::vector<std::size_t> genuine_idx;
  std::vector<std::size_t> impostor_idx;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    (table.rows[i].label == Label::genuine ? genuine_idx : impostor_idx).push_back(i);
  }
  if (n_genuine_train > genuine_idx.size()) {
    throw std::runtime_error("requested " + std::to_string(n_genuine_train) +
                             " genuine training rows, only " +
                             std::to_string(genuine_idx.size()) + " available");
  }
  if (n_impostor_train > impostor_idx.size()) {
    throw std::runtime_error("requested " + std::to_string(n_impostor_train) +
                             " impostor training rows, only " +
                             std::to_string(impostor_idx.size()) + " available");
  }

  Rng rng(seed);
  rng.shuffle(genuine_idx);
  rng.shuffle(impostor_idx);

  std::vector<bool> in_train(table.rows.size(), false);
  for (std::size_t i = 0; i < n_genuine_train; ++i) in_train[genuine_idx[i]] = true;
  for (std::size_t i = 0; i < n_impostor_train; ++i) in_train[impostor_idx[i]] = true;

  MatchedScoreTable train;
  MatchedScoreTable probe;
  train.matcher_names = table.matcher_names;
  probe.matcher_names = table.matcher_names;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    (in_train[i] ? train : probe).rows.push_back(table.rows[i]);
  }
  return {std::move(train), std::move(probe)};
}

CorrelationMatrix correlation_matrix(const MatchedScoreTable& table,
                                     CorrelationPooling pooling) {
  std::vector<const ScoreRow*> rows;
  for (const auto& row : table.rows) {
    if (pooling == CorrelationPooling::genuine_only && row.label != Label::genuine) continue;
    if (pooling == CorrelationPooling::impostor_only && row.label != Label::impostor) continue;
    rows.push_back(&row);
  }
  const std::size_t n = rows.size();
  const std::size_t k = table.matcher_names.size();
  if (n < 2) throw std::runtime_error("correlation needs at least 2 rows");

  std::vector<double> mean(k, 0.0);
  for (const auto* row : rows) {
    for (std::size_t j = 0; j < k; ++j) mean[j] += row->scores[j];
  }
  for (auto& m : mean) m /= static_cast<double>(n);

  // Centered cross sums; diagonal entries are the variances.
  std::vector<std::vector<double>> sums(k, std::vector<double>(k, 0.0));
  for (const auto* row : rows) {
    for (std::size_t a = 0; a < k; ++a) {
      const double da = row->scores[a] - mean[a];
      for (std::size_t b = a; b < k; ++b) {
        sums[a][b] += da * (row->scores[b] - mean[b]);
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (sums[a][a] <= 0.0) {
      throw std::runtime_error("matcher '" + table.matcher_names[a] +
                               "' has zero score variance");
    }
  }

  CorrelationMatrix out;
  out.matcher_names = table.matcher_names;
  out.entries.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    out.entries[a][a] = 1.0;
    for (std::size_t b = a + 1; b < k; ++b) {
      const double r = sums[a][b] / std::sqrt(sums[a][a] * sums[b][b]);
      out.entries[a][b] = r;
      out.entries[b][a] = r;
    }
  }
  return out;
}

std::vector<std::vector<double>> cholesky_lower(const std::vector<std::vector<double>>& matrix) {
  const std::size_t k = matrix.size();
  const double tol = 1e-10;
  std::vector<std::vector<double>> lower(k, std::vector<double>(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    if (matrix[j].size() != k) throw std::runtime_error("correlation matrix is not square");
    double d = matrix[j][j];
    for (std::size_t t = 0; t < j; ++t) d -= lower[j][t] * lower[j][t];
    if (d < -tol) throw std::runtime_error("correlation matrix is not positive semidefinite");
    lower[j][j] = d > tol ? std::sqrt(d) : 0.0;
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = matrix[i][j];
      for (std::size_t t = 0; t < j; ++t) s -= lower[i][t] * lower[j][t];
      if (lower[j][j] > 0.0) {
        lower[i][j] = s / lower[j][j];
      } else if (std::abs(s) > 1e-8) {
        throw std::runtime_error("correlation matrix is not positive semidefinite");
      } else {
        lower[i][j] = 0.0;
      }
    }
  }
  return lower;
}

namespace {

void check_correlation_shape(const std::vector<std::vector<double>>& m, std::size_t k,
                             const std::string& what) {
  if (m.size() != k) throw std::runtime_error(what + ": expected " + std::to_string(k) + " rows");
  for (std::size_t a = 0; a < k; ++a) {
    if (m[a].size() != k) throw std::runtime_error(what + ": matrix is not square");
    if (m[a][a] != 1.0) throw std::runtime_error(what + ": diagonal entries must equal 1");
    for (std::size_t b = 0; b < k; ++b) {
      if (m[a][b] != m[b][a]) throw std::runtime_error(what + ": matrix is not symmetric");
      if (m[a][b] < -1.0 || m[a][b] > 1.0) {
        throw std::runtime_error(what + ": entries must lie in [-1, 1]");
      }
    }
  }
}

std::vector<std::vector<double>> identity_matrix(std::size_t k) {
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1.0;
  return m;
}

void append_class_rows(MatchedScoreTable& table, const ClassMarginals& marginals,
                       const std::vector<std::vector<double>>& correlation, std::size_t count,
                       Label label, char id_prefix, Rng& rng) {
  const std::size_t k = table.matcher_names.size();
  const auto lower = cholesky_lower(correlation);
  std::vector<double> latent(k);
  for (std::size_t r = 0; r < count; ++r) {
    for (auto& z : latent) z = rng.normal();
    ScoreRow row;
    row.id = id_prefix + std::to_string(r + 1);
    row.label = label;
    row.scores.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      double z = 0.0;
      for (std::size_t j = 0; j <= i; ++j) z += lower[i][j] * latent[j];
      row.scores[i] = marginals.mean[i] + marginals.stddev[i] * z;
    }
    table.rows.push_back(std::move(row));
  }
}

}  // namespace

void SynthSpec::validate() const {
  const std::size_t k = matchers.size();
  if (k == 0) throw std::runtime_error("synth spec: no matchers");
  if (n_genuine == 0 || n_impostor == 0) {
    throw std::runtime_error("synth spec: sample counts must be positive");
  }
  for (const auto* marginals : {&genuine, &impostor}) {
    if (marginals->mean.size() != k || marginals->stddev.size() != k) {
      throw std::runtime_error("synth spec: marginal parameter count != matcher count");
    }
    for (double sd : marginals->stddev) {
      if (!(sd > 0.0)) throw std::runtime_error("synth spec: stddev must be > 0");
    }
  }
  if (!correlation.empty()) check_correlation_shape(correlation, k, "synth spec correlation");
  if (genuine_correlation) check_correlation_shape(*genuine_correlation, k, "genuine correlation");
  if (impostor_correlation) {
    check_correlation_shape(*impostor_correlation, k, "impostor correlation");
  }
}

MatchedScoreTable synth_generate(const SynthSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t k = spec.matchers.size();
  const auto shared = spec.correlation.empty() ? identity_matrix(k) : spec.correlation;
  const auto genuine_corr = spec.genuine_correlation.value_or(shared);
  const auto impostor_corr = spec.impostor_correlation.value_or(shared);

  MatchedScoreTable table;
  table.matcher_names = spec.matchers;
  table.rows.reserve(spec.n_genuine + spec.n_impostor);
  Rng rng(seed);
  append_class_rows(table, spec.genuine, genuine_corr, spec.n_genuine, Label::genuine, 'g', rng);
  append_class_rows(table, spec.impostor, impostor_corr, spec.n_impostor, Label::impostor, 'i', rng);
  return table;
}

ScoreSet column_score_set(const MatchedScoreTable& table, const std::string& matcher) {
  const std::size_t col = table.matcher_index(matcher);
  ScoreSet set;
  for (const auto& row : table.rows) {
    (row.label == Label::genuine ? set.genuine : set.impostor).push_back(row.scores[col]);
  }
  return set;
}

SynthSpec parse_synth_spec(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("synth spec: invalid JSON: ") + e.what());
  }
  SynthSpec spec;
  try {
    spec.matchers = doc.at("matchers").get<std::vector<std::string>>();
    spec.genuine.mean = doc.at("genuine").at("mean").get<std::vector<double>>();
    spec.genuine.stddev = doc.at("genuine").at("stddev").get<std::vector<double>>();
    spec.impostor.mean = doc.at("impostor").at("mean").get<std::vector<double>>();
    spec.impostor.stddev = doc.at("impostor").at("stddev").get<std::vector<double>>();
    spec.n_genuine = doc.at("n_genuine").get<std::size_t>();
    spec.n_impostor = doc.at("n_impostor").get<std::size_t>();
    using Matrix = std::vector<std::vector<double>>;
    if (doc.contains("correlation")) spec.correlation = doc["correlation"].get<Matrix>();
    if (doc.at("genuine").contains("correlation")) {
      spec.genuine_correlation = doc["genuine"]["correlation"].get<Matrix>();
    }
    if (doc.at("impostor").contains("correlation")) {
      spec.impostor_correlation = doc["impostor"]["correlation"].get<Matrix>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("synth spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

void write_correlation_csv(const CorrelationMatrix& matrix, std::ostream& out) {
  out << "matcher";
  for (const auto& name : matrix.matcher_names) out << ',' << name;
  out << '\n';
  for (std::size_t a = 0; a < matrix.matcher_names.size(); ++a) {
    out << matrix.matcher_names[a];
    for (double v : matrix.entries[a]) out << ',' << format_double(v);
    out << '\n';
  }
}

}  // namespace cascal
