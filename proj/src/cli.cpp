#include "cascal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cascal/cascade.hpp"
#include "cascal/error_model.hpp"
#include "cascal/rng.hpp"
#include "cascal/roc.hpp"
#include "cascal/score_table.hpp"
#include "cascal/simulate.hpp"
#include "cascal/svg_plot.hpp"
#include "cascal/util.hpp"
#include "json.hpp"

namespace cascal {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

MatchedScoreTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  try {
    return parse_score_table(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

RocCurve load_curve(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  try {
    return parse_curve_csv(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<std::string> parse_chain_flag(const std::string& value) {
  std::vector<std::string> chain = split_csv_line(value);
  for (const auto& name : chain) {
    if (name.empty()) throw std::runtime_error("--chain has an empty matcher name");
  }
  return chain;
}

// Records one invocation; written next to the primary output so any result
// can be reproduced byte for byte.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void write(const std::string& primary_output) const {
    nlohmann::json doc;
    doc["tool"] = "cascal";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["argv"] = argv;
    doc["params"] = params;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs;
    write_file(primary_output + ".manifest.json", doc.dump(2) + "\n");
  }
};

void print_warnings(const CascadeModel& model) {
  for (const auto& warning : model.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
}

std::vector<double> make_grid(const std::string& spec, const CascadeModel& model,
                              const MatchedScoreTable& probe) {
  if (spec == "scores") return score_grid(probe, model.last_matcher);
  if (spec.rfind("uniform:", 0) == 0) {
    const std::string count = spec.substr(8);
    std::size_t k = 0;
    try {
      k = std::stoul(count);
    } catch (const std::exception&) {
      throw std::runtime_error("--grid uniform:K needs an integer K, got '" + count + "'");
    }
    return uniform_grid(model.last_roc, k);
  }
  throw std::runtime_error("--grid must be 'scores' or 'uniform:K', got '" + spec + "'");
}

// NIST BSSR1-style directory: one whitespace-separated file per matcher with
// `probe_id gallery_id score` lines; a comparison is genuine when the two ids
// match. The matcher name is the file stem; rows are merged on the id pair.
MatchedScoreTable load_bssr1_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no score files in '" + dir + "'");

  MatchedScoreTable table;
  struct Cell {
    std::vector<double> scores;
    std::vector<bool> seen;
  };
  std::map<std::pair<std::string, std::string>, Cell> cells;
  for (std::size_t m = 0; m < files.size(); ++m) {
    table.matcher_names.push_back(fs::path(files[m]).stem().string());
    std::ifstream in(files[m]);
    if (!in) throw std::runtime_error("cannot open '" + files[m] + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream fields(line);
      std::string probe_id, gallery_id, score_text;
      if (!(fields >> probe_id >> gallery_id >> score_text)) {
        if (probe_id.empty()) continue;  // blank line
        throw std::runtime_error(files[m] + ": line " + std::to_string(line_no) +
                                 ": expected 'probe gallery score'");
      }
      const double score = parse_double_strict(
          score_text, files[m] + ": line " + std::to_string(line_no));
      Cell& cell = cells[{probe_id, gallery_id}];
      cell.scores.resize(files.size(), 0.0);
      cell.seen.resize(files.size(), false);
      cell.scores[m] = score;
      cell.seen[m] = true;
    }
  }
  for (auto& [key, cell] : cells) {
    for (std::size_t m = 0; m < files.size(); ++m) {
      if (!cell.seen[m]) {
        throw std::runtime_error("comparison " + key.first + " vs " + key.second +
                                 " is missing from '" + files[m] + "'");
      }
    }
    ScoreRow row;
    row.id = key.first + ":" + key.second;
    row.label = key.first == key.second ? Label::genuine : Label::impostor;
    row.scores = std::move(cell.scores);
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

struct CommonFlags {
  std::vector<std::string> in;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_synth(const CommonFlags& flags, Manifest& manifest) {
  std::ifstream in(flags.in.at(0), std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + flags.in.at(0) + "' for reading");
  const SynthSpec spec = parse_synth_spec(in);
  const MatchedScoreTable table = synth_generate(spec, flags.seed);
  std::ostringstream csv;
  write_score_table(table, csv);
  write_file(flags.out, csv.str());
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_corr(const CommonFlags& flags, const std::string& bssr1_dir,
             const std::string& table_out, bool by_class, Manifest& manifest) {
  MatchedScoreTable table;
  if (!bssr1_dir.empty()) {
    table = load_bssr1_dir(bssr1_dir);
  } else if (!flags.in.empty()) {
    table = load_table(flags.in.at(0));
  } else {
    throw std::runtime_error("corr needs --in or --bssr1-dir");
  }
  auto emit = [&](CorrelationPooling pooling, const std::string& path) {
    std::ostringstream csv;
    write_correlation_csv(correlation_matrix(table, pooling), csv);
    write_file(path, csv.str());
    manifest.outputs.push_back(path);
  };
  emit(CorrelationPooling::pooled, flags.out);
  if (by_class) {
    emit(CorrelationPooling::genuine_only, flags.out + ".genuine.csv");
    emit(CorrelationPooling::impostor_only, flags.out + ".impostor.csv");
  }
  if (!table_out.empty()) {
    std::ostringstream csv;
    write_score_table(table, csv);
    write_file(table_out, csv.str());
    manifest.outputs.push_back(table_out);
  }
  manifest.write(flags.out);
  return 0;
}

int cmd_roc(const CommonFlags& flags, const std::string& matcher, Manifest& manifest) {
  const MatchedScoreTable table = load_table(flags.in.at(0));
  std::string name = matcher;
  if (name.empty()) {
    if (table.matcher_names.size() != 1) {
      throw std::runtime_error("--matcher is required (table has " +
                               join(table.matcher_names, ", ") + ")");
    }
    name = table.matcher_names[0];
  }
  const ScoreSet set = column_score_set(table, name);
  const RocCurve curve = build_roc(set);
  std::ostringstream csv;
  write_curve_csv(curve, csv);
  write_file(flags.out, csv.str());

  const OperationalPoint low = zero_frr_point(set);
  const OperationalPoint high = zero_far_point(set);
  nlohmann::json summary;
  summary["matcher"] = name;
  summary["eer"] = eer(curve);
  summary["auc"] = auc(curve);
  summary["zero_frr"] = {{"threshold", low.threshold}, {"value", low.far}};
  summary["zero_far"] = {{"threshold", high.threshold}, {"value", high.frr}};
  std::cout << summary.dump() << "\n";

  manifest.params["matcher"] = name;
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

// Shared by calibrate and order-search: optional deterministic train/probe
// split driven by --train-genuine/--train-impostor.
std::pair<MatchedScoreTable, MatchedScoreTable> split_if_requested(
    const MatchedScoreTable& table, long long train_genuine, long long train_impostor,
    std::uint64_t seed) {
  if (train_genuine < 0 && train_impostor < 0) return {table, MatchedScoreTable{}};
  if (train_genuine < 0 || train_impostor < 0) {
    throw std::runtime_error("--train-genuine and --train-impostor must be given together");
  }
  return split_table(table, static_cast<std::size_t>(train_genuine),
                     static_cast<std::size_t>(train_impostor), seed);
}

int cmd_calibrate(const CommonFlags& flags, const std::string& chain_flag,
                  long long train_genuine, long long train_impostor,
                  const std::string& probe_out, Manifest& manifest) {
  const MatchedScoreTable table = load_table(flags.in.at(0));
  const auto [train, probe] =
      split_if_requested(table, train_genuine, train_impostor, flags.seed);
  const std::vector<std::string> chain =
      chain_flag.empty() ? heuristic_order(matcher_metrics(train)) : parse_chain_flag(chain_flag);
  const CascadeModel model = calibrate(train, chain);
  print_warnings(model);
  write_file(flags.out, model_to_json(model));
  manifest.params["chain"] = chain;
  manifest.outputs.push_back(flags.out);
  if (!probe_out.empty()) {
    std::ostringstream csv;
    write_score_table(probe, csv);
    write_file(probe_out, csv.str());
    manifest.outputs.push_back(probe_out);
  }
  manifest.write(flags.out);
  return 0;
}

int cmd_predict(const CommonFlags& flags, Manifest& manifest) {
  const CascadeModel model = model_from_json(read_file(flags.in.at(0)));
  const PredictedRoc prediction = predict_roc(model);
  std::ostringstream csv;
  write_curve_csv(to_curve(prediction), csv);
  write_file(flags.out, csv.str());
  nlohmann::json summary;
  summary["g_factor"] = prediction.g_factor;
  summary["h_factor"] = prediction.h_factor;
  summary["predicted_auc"] = predicted_auc(prediction);
  std::cout << summary.dump() << "\n";
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_simulate(const CommonFlags& flags, const std::string& probe_path,
                 const std::string& grid_spec, const std::string& threshold_text,
                 Manifest& manifest) {
  const CascadeModel model = model_from_json(read_file(flags.in.at(0)));
  const MatchedScoreTable probe = load_table(probe_path);
  manifest.inputs.push_back(probe_path);
  if (!threshold_text.empty()) {
    const double threshold = parse_double_strict(threshold_text, "--threshold");
    const CascadeRunResult result = run_cascade(model, probe, threshold);
    write_file(flags.out, run_result_to_json(result));
    manifest.params["threshold"] = threshold;
  } else {
    const RocCurve curve = empirical_roc(model, probe, make_grid(grid_spec, model, probe));
    std::ostringstream csv;
    write_curve_csv(curve, csv);
    write_file(flags.out, csv.str());
    manifest.params["grid"] = grid_spec;
  }
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_compare(const CommonFlags& flags, Manifest& manifest) {
  if (flags.in.size() != 2) throw std::runtime_error("compare needs exactly two --in curves");
  const RocCurve a = load_curve(flags.in[0]);
  const RocCurve b = load_curve(flags.in[1]);
  const DivergenceReport report = compare_rocs(a, b);
  write_file(flags.out, divergence_to_json(report));
  std::cout << divergence_to_json(report);
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

ErrorParams params_from_flags(double alpha, double alpha_rel, double epsilon,
                              const std::string& sign_text, const std::string& params_path) {
  if (!params_path.empty()) {
    if (alpha >= 0.0 || alpha_rel >= 0.0 || epsilon >= 0.0) {
      throw std::runtime_error("--params conflicts with --alpha/--alpha-rel/--epsilon");
    }
    return params_from_json(read_file(params_path));
  }
  ErrorParams params;
  if (alpha >= 0.0 && alpha_rel >= 0.0) {
    throw std::runtime_error("--alpha and --alpha-rel are mutually exclusive");
  }
  if (alpha_rel >= 0.0) {
    params.alpha = alpha_rel;
    params.alpha_is_relative = true;
  } else if (alpha >= 0.0) {
    params.alpha = alpha;
  }
  params.epsilon = epsilon >= 0.0 ? epsilon : 0.0;
  if (sign_text == "plus") params.sign = Sign::plus;
  else if (sign_text == "minus") params.sign = Sign::minus;
  else if (sign_text == "both") params.sign = Sign::both;
  else throw std::runtime_error("--sign must be plus, minus or both");
  return params;
}

int cmd_band(const CommonFlags& flags, const ErrorParams& params, Manifest& manifest) {
  const CascadeModel model = model_from_json(read_file(flags.in.at(0)));
  const PredictedRoc prediction = predict_roc(model);
  const ErrorBand result = band(prediction, model, params);
  std::ostringstream csv;
  write_band_csv(result, csv);
  write_file(flags.out, csv.str());
  manifest.params["alpha"] = params.alpha;
  manifest.params["alpha_is_relative"] = params.alpha_is_relative;
  manifest.params["epsilon"] = params.epsilon;
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_estimate_errors(const CommonFlags& flags, const std::string& probe_path,
                        Manifest& manifest) {
  const CascadeModel model = model_from_json(read_file(flags.in.at(0)));
  const MatchedScoreTable probe = load_table(probe_path);
  manifest.inputs.push_back(probe_path);
  const ErrorParams params = estimate_params(model, probe);
  write_file(flags.out, params_to_json(params));
  std::cout << params_to_json(params);
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_order_search(const CommonFlags& flags, std::size_t length, long long train_genuine,
                     long long train_impostor, std::size_t simulate_top, Manifest& manifest) {
  const MatchedScoreTable table = load_table(flags.in.at(0));
  const auto [train, probe] =
      split_if_requested(table, train_genuine, train_impostor, flags.seed);
  const auto chains = enumerate_chains(train.matcher_names, length);
  const auto ranked = rank_chains(train, chains);

  if (simulate_top > 0 && probe.rows.empty()) {
    throw std::runtime_error("--simulate-top needs a probe set; pass --train-genuine/--train-impostor");
  }
  std::ostringstream csv;
  csv << "rank,chain,predicted_auc,g_factor,h_factor";
  if (simulate_top > 0) csv << ",empirical_auc";
  csv << '\n';
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    csv << (i + 1) << ',' << chain_key(ranked[i].chain) << ','
        << format_double(ranked[i].predicted_auc) << ',' << format_double(ranked[i].g_factor)
        << ',' << format_double(ranked[i].h_factor);
    if (simulate_top > 0) {
      csv << ',';
      if (i < simulate_top) {
        const CascadeModel model = calibrate(train, ranked[i].chain);
        const RocCurve curve =
            empirical_roc(model, probe, score_grid(probe, model.last_matcher));
        csv << format_double(anchored_auc(curve));
      }
    }
    csv << '\n';
  }
  write_file(flags.out, csv.str());
  manifest.params["length"] = length;
  manifest.params["chains"] = ranked.size();
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

int cmd_plot(const CommonFlags& flags, const std::string& band_path, const std::string& title,
             Manifest& manifest) {
  std::vector<PlotSeries> series;
  for (const auto& path : flags.in) {
    const RocCurve curve = load_curve(path);
    PlotSeries s;
    s.label = fs::path(path).stem().string();
    for (const auto& p : curve.points) s.far_frr.emplace_back(p.far, p.frr);
    series.push_back(std::move(s));
  }
  if (!band_path.empty()) {
    std::ifstream in(band_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + band_path + "' for reading");
    std::string line;
    std::getline(in, line);
    PlotSeries low{"band low", {}, true};
    PlotSeries high{"band high", {}, true};
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto fields = split_csv_line(line);
      if (fields.size() != 7) {
        throw std::runtime_error(band_path + ": line " + std::to_string(line_no) +
                                 ": expected 7 fields");
      }
      const std::string ctx = band_path + ": line " + std::to_string(line_no);
      low.far_frr.emplace_back(parse_double_strict(fields[2], ctx),
                               parse_double_strict(fields[5], ctx));
      high.far_frr.emplace_back(parse_double_strict(fields[3], ctx),
                                parse_double_strict(fields[6], ctx));
    }
    series.push_back(std::move(low));
    series.push_back(std::move(high));
    manifest.inputs.push_back(band_path);
  }
  std::ostringstream svg;
  write_roc_svg(svg, series, title);
  write_file(flags.out, svg.str());
  manifest.outputs.push_back(flags.out);
  manifest.write(flags.out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"cascal - calibration and analytic ROC prediction for serial matcher cascades"};
  app.require_subcommand(1);

  // Common state filled by whichever subcommand runs.
  CommonFlags flags;
  std::string chain_flag, matcher, probe_path, grid_spec = "scores";
  std::string bssr1_dir, table_out, probe_out, band_path, params_path, title = "ROC";
  std::string threshold_text, sign_text = "plus";
  long long train_genuine = -1, train_impostor = -1;
  std::size_t length = 2, simulate_top = 0;
  double alpha = -1.0, alpha_rel = -1.0, epsilon = -1.0;
  bool by_class = false;

  auto add_common = [&](CLI::App* cmd, bool in_required = true, int in_count = 1) {
    auto* in = cmd->add_option("--in", flags.in, "input file(s)");
    if (in_required) in->required();
    if (in_count > 0) in->expected(in_count);
    cmd->add_option("--out", flags.out, "primary output file")->required();
    cmd->add_option("--seed", flags.seed, "seed for all randomness (default 0)");
  };

  auto* synth = app.add_subcommand("synth", "generate a matched score table from a spec JSON");
  add_common(synth);

  auto* corr = app.add_subcommand("corr", "Pearson correlation matrix of a score table");
  add_common(corr, false);
  corr->add_option("--bssr1-dir", bssr1_dir,
                   "directory of per-matcher 'probe gallery score' files (alternative to --in)");
  corr->add_option("--table-out", table_out, "also write the (converted) wide CSV table");
  corr->add_flag("--by-class", by_class, "also write per-class matrices");

  auto* roc_cmd = app.add_subcommand("roc", "per-matcher ROC curve and operational points");
  add_common(roc_cmd);
  roc_cmd->add_option("--matcher", matcher, "matcher column to analyse");

  auto* calibrate_cmd = app.add_subcommand("calibrate", "calibrate a cascade on training data");
  add_common(calibrate_cmd);
  calibrate_cmd->add_option("--chain", chain_flag,
                            "comma-separated matcher order (default: heuristic order)");
  calibrate_cmd->add_option("--train-genuine", train_genuine, "genuine rows for the train split")
      ->check(CLI::NonNegativeNumber);
  calibrate_cmd->add_option("--train-impostor", train_impostor,
                            "impostor rows for the train split")
      ->check(CLI::NonNegativeNumber);
  calibrate_cmd->add_option("--probe-out", probe_out, "write the probe remainder of the split");

  auto* predict = app.add_subcommand("predict", "analytic whole-cascade ROC from a model");
  add_common(predict);

  auto* simulate = app.add_subcommand("simulate", "run the cascade on matched probe scores");
  add_common(simulate);
  simulate->add_option("--probe", probe_path, "probe score table")->required();
  simulate->add_option("--grid", grid_spec, "threshold grid: scores | uniform:K");
  simulate->add_option("--threshold", threshold_text,
                       "single last-stage threshold; output becomes a run-result JSON");

  auto* compare = app.add_subcommand("compare", "divergence report between two ROC curves");
  add_common(compare, true, 2);

  auto* band_cmd = app.add_subcommand("band", "estimation-error band around the predicted ROC");
  add_common(band_cmd);
  band_cmd->add_option("--alpha", alpha, "absolute zero-value displacement");
  band_cmd->add_option("--alpha-rel", alpha_rel, "relative displacement (fraction of each zero value)");
  band_cmd->add_option("--epsilon", epsilon, "residual error at the estimated thresholds");
  band_cmd->add_option("--sign", sign_text, "plus | minus | both (band sweeps both regardless)");
  band_cmd->add_option("--params", params_path, "use fitted parameters from estimate-errors");

  auto* estimate = app.add_subcommand("estimate-errors", "fit alpha/epsilon on a probe set");
  add_common(estimate);
  estimate->add_option("--probe", probe_path, "probe score table")->required();

  auto* order = app.add_subcommand("order-search", "rank matcher chains by predicted ROC");
  add_common(order);
  order->add_option("--length", length, "chain length")->required();
  order->add_option("--train-genuine", train_genuine, "genuine rows for the train split")
      ->check(CLI::NonNegativeNumber);
  order->add_option("--train-impostor", train_impostor, "impostor rows for the train split")
      ->check(CLI::NonNegativeNumber);
  order->add_option("--simulate-top", simulate_top,
                    "verify the top K chains by simulation on the probe split");

  auto* plot = app.add_subcommand("plot", "SVG ROC plot (log FAR axis) from curve CSVs");
  add_common(plot, true, -1);
  plot->add_option("--band", band_path, "overlay a band CSV");
  plot->add_option("--title", title, "plot title");

  std::vector<const char*> argv;
  argv.push_back("cascal");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CLI::App* sub = app.get_subcommands().front();
  Manifest manifest;
  manifest.command = sub->get_name();
  manifest.argv = args;
  manifest.inputs = flags.in;
  manifest.params["seed"] = flags.seed;

  try {
    if (sub == synth) return cmd_synth(flags, manifest);
    if (sub == corr) return cmd_corr(flags, bssr1_dir, table_out, by_class, manifest);
    if (sub == roc_cmd) return cmd_roc(flags, matcher, manifest);
    if (sub == calibrate_cmd) {
      return cmd_calibrate(flags, chain_flag, train_genuine, train_impostor, probe_out,
                           manifest);
    }
    if (sub == predict) return cmd_predict(flags, manifest);
    if (sub == simulate) {
      return cmd_simulate(flags, probe_path, grid_spec, threshold_text, manifest);
    }
    if (sub == compare) return cmd_compare(flags, manifest);
    if (sub == band_cmd) {
      const ErrorParams params =
          params_from_flags(alpha, alpha_rel, epsilon, sign_text, params_path);
      return cmd_band(flags, params, manifest);
    }
    if (sub == estimate) return cmd_estimate_errors(flags, probe_path, manifest);
    if (sub == order) {
      return cmd_order_search(flags, length, train_genuine, train_impostor, simulate_top,
                              manifest);
    }
    if (sub == plot) return cmd_plot(flags, band_path, title, manifest);
    throw std::runtime_error("unhandled subcommand");
  } catch (const std::exception& e) {
    std::cerr << "cascal " << manifest.command << ": " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace cascal
