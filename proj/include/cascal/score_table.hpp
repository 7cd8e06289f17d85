#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cascal {

enum class Label { impostor = 0, genuine = 1 };

struct ScoreRow {
  std::string id;               // opaque; duplicates allowed
  Label label = Label::impostor;
  std::vector<double> scores;   // one per matcher, higher = more genuine-like

  bool operator==(const ScoreRow&) const = default;
};

// Matched comparison events: every row carries one score per matcher, so the
// joint (possibly correlated) behaviour of the matchers is preserved.
struct MatchedScoreTable {
  std::vector<std::string> matcher_names;
  std::vector<ScoreRow> rows;

  std::size_t matcher_index(const std::string& name) const;  // throws if unknown
  std::size_t count(Label label) const;
  void validate() const;  // checks the structural invariants, throws on violation

  bool operator==(const MatchedScoreTable&) const = default;
};

// Class-conditional score samples for a single matcher.
struct ScoreSet {
  std::vector<double> genuine;
  std::vector<double> impostor;
};

struct CorrelationMatrix {
  std::vector<std::string> matcher_names;
  std::vector<std::vector<double>> entries;  // symmetric, unit diagonal
};

enum class CorrelationPooling { pooled, genuine_only, impostor_only };

struct ClassMarginals {
  std::vector<double> mean;
  std::vector<double> stddev;  // all > 0
};

// Gaussian-copula synthesis spec: Gaussian marginals per class per matcher,
// one correlation matrix shared by both classes unless a per-class override
// is given.
struct SynthSpec {
  std::vector<std::string> matchers;
  ClassMarginals genuine;
  ClassMarginals impostor;
  std::vector<std::vector<double>> correlation;  // shared; identity if empty
  std::optional<std::vector<std::vector<double>>> genuine_correlation;
  std::optional<std::vector<std::vector<double>>> impostor_correlation;
  std::size_t n_genuine = 0;
  std::size_t n_impostor = 0;

  void validate() const;
};

// Wide CSV: header `id,label,<matcher1>,...`; label 1 = genuine, 0 = impostor,
// anything else is an error. All parse errors carry a line number.
MatchedScoreTable parse_score_table(std::istream& in);
void write_score_table(const MatchedScoreTable& table, std::ostream& out);

// Deterministic seeded partition: train gets exactly the requested class
// counts, probe gets the rest; both preserve the input row order.
std::pair<MatchedScoreTable, MatchedScoreTable> split_table(
    const MatchedScoreTable& table, std::size_t n_genuine_train,
    std::size_t n_impostor_train, std::uint64_t seed);

// Pearson coefficients per matcher pair. Default pools both classes; the
// per-class variants exist for diagnosis.
CorrelationMatrix correlation_matrix(const MatchedScoreTable& table,
                                     CorrelationPooling pooling = CorrelationPooling::pooled);

MatchedScoreTable synth_generate(const SynthSpec& spec, std::uint64_t seed);

ScoreSet column_score_set(const MatchedScoreTable& table, const std::string& matcher);

SynthSpec parse_synth_spec(std::istream& in);
void write_correlation_csv(const CorrelationMatrix& matrix, std::ostream& out);

// Lower-triangular Cholesky factor with a PSD tolerance (zero pivots are
// accepted, negative ones are not). Throws on non-PSD input.
std::vector<std::vector<double>> cholesky_lower(const std::vector<std::vector<double>>& matrix);

}  // namespace cascal
