// Command line front end: fit / split / predict / generate-unknowns /
// experiment over CSV datasets. Line-oriented text on stdout, JSON behind
// --json, diagnostics on stderr. All randomness is seed-controlled, so
// identical invocations produce identical bytes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aknn/aknn.hpp"
#include "aknn/csv.hpp"
#include "aknn/error.hpp"
#include "aknn/eval.hpp"
#include "aknn/scaling.hpp"
#include "aknn/split.hpp"
#include "aknn/unknowns.hpp"

namespace {

using aknn::Dataset;

struct MetricFlags {
  std::string name = "euclidean";
  double q = 2.0;

  aknn::DistanceMetric build() const {
    if (name == "euclidean") return aknn::DistanceMetric::euclidean();
    if (name == "manhattan") return aknn::DistanceMetric::manhattan();
    return aknn::DistanceMetric::minkowski(q);
  }
};

struct CsvFlags {
  bool no_header = false;
  std::string label_column;  // empty = last column; digits = index; else name

  aknn::CsvReadOptions build() const {
    aknn::CsvReadOptions opts;
    opts.has_header = !no_header;
    if (!label_column.empty()) {
      const bool digits = label_column.find_first_not_of("0123456789") ==
                          std::string::npos;
      opts.label_column = digits
                              ? aknn::LabelColumn::index(std::stoul(label_column))
                              : aknn::LabelColumn::name(label_column);
    }
    return opts;
  }
};

void add_metric_flags(CLI::App* cmd, MetricFlags& flags) {
  cmd->add_option("--metric", flags.name, "Distance metric")
      ->check(CLI::IsMember({"euclidean", "manhattan", "minkowski"}))
      ->capture_default_str();
  cmd->add_option("--q", flags.q, "Minkowski order (>= 1)")
      ->capture_default_str();
}

void add_csv_flags(CLI::App* cmd, CsvFlags& flags) {
  cmd->add_flag("--no-header", flags.no_header,
                "Input CSV has no header row");
  cmd->add_option("--label-column", flags.label_column,
                  "Label column, by 0-based index or header name "
                  "(default: last column)");
}

aknn::MinDistMode parse_mode(const std::string& mode) {
  return mode == "expected-class-min" ? aknn::MinDistMode::ExpectedClassMin
                                      : aknn::MinDistMode::GlobalMin;
}

void print_warnings(const aknn::AknnModel& model) {
  for (const auto& warning : model.warnings()) {
    std::cerr << "warning: " << warning << '\n';
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) {
    return std::cout;
  }
  file.open(path);
  if (!file) {
    aknn::raise(aknn::ErrorCode::InvalidArgument,
                "cannot open \"" + path + "\" for writing");
  }
  return file;
}

// Column count of the first non-empty line, or nullopt for a file with no
// content at all.
std::optional<std::size_t> peek_width(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    aknn::raise(aknn::ErrorCode::InvalidArgument,
                "cannot open \"" + path + "\" for reading");
  }
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    return static_cast<std::size_t>(
               std::count(line.begin(), line.end(), ',')) + 1;
  }
  return std::nullopt;
}

// Query rows may be bare feature vectors (dim columns) or carry a label
// column (dim + 1) that prediction ignores.
Dataset load_queries(const std::string& path, const CsvFlags& csv,
                     std::size_t dim) {
  const auto width = peek_width(path);
  if (!width) {
    Dataset empty;
    empty.dim = dim;
    return empty;
  }
  if (*width == dim) {
    return aknn::load_features_csv(path, !csv.no_header, true);
  }
  if (*width == dim + 1) {
    auto opts = csv.build();
    opts.allow_empty = true;
    return aknn::load_csv(path, opts);
  }
  aknn::raise(aknn::ErrorCode::DimensionMismatch,
              "\"" + path + "\" has " + std::to_string(*width) +
                  " columns; expected " + std::to_string(dim) + " (features) or " +
                  std::to_string(dim + 1) + " (features plus label)");
}

int cmd_fit(const std::string& train_path, const CsvFlags& csv,
            const MetricFlags& metric, std::size_t k, double gc,
            const std::string& mode, bool normalize, bool as_json) {
  Dataset train = aknn::load_csv(train_path, csv.build());
  if (normalize) {
    train = aknn::MinMaxScaler::fit(train).transform(train);
  }
  const auto model =
      aknn::AknnModel::fit(train, {k, metric.build(), gc}, parse_mode(mode));
  print_warnings(model);

  if (as_json) {
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& [label, region] : model.regions()) {
      regions.push_back({{"label", label},
                         {"support", region.support},
                         {"tca", region.tca},
                         {"area", region.area}});
    }
    nlohmann::json j{{"train_size", train.size()},
                     {"dim", train.dim},
                     {"k", k},
                     {"gc", gc},
                     {"metric", metric.name},
                     {"regions", regions}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "label,support,tca,area\n";
    for (const auto& [label, region] : model.regions()) {
      std::cout << label << ',' << region.support << ','
                << aknn::format_double(region.tca) << ','
                << aknn::format_double(region.area) << '\n';
    }
  }
  return 0;
}

int cmd_split(const std::string& input, const CsvFlags& csv, double fraction,
              std::uint64_t seed, bool stratified, std::string train_out,
              std::string test_out) {
  const Dataset data = aknn::load_csv(input, csv.build());
  const auto result =
      aknn::split(data, {fraction, seed, stratified});

  const auto stem = std::filesystem::path(input).stem().string();
  if (train_out.empty()) train_out = stem + "_train.csv";
  if (test_out.empty()) test_out = stem + "_test.csv";
  aknn::save_csv(result.train, train_out);
  aknn::save_csv(result.test, test_out);

  std::cout << result.train.size() << " / " << result.test.size() << '\n';
  std::cerr << "wrote " << train_out << " and " << test_out << '\n';
  return 0;
}

int cmd_predict(const std::string& train_path, const std::string& query_path,
                const CsvFlags& csv, const MetricFlags& metric,
                const std::string& algorithm, std::size_t k, double gc,
                const std::string& mode, bool normalize, bool as_json,
                const std::string& output) {
  Dataset train = aknn::load_csv(train_path, csv.build());
  Dataset queries = load_queries(query_path, csv, train.dim);
  if (normalize) {
    const auto scaler = aknn::MinMaxScaler::fit(train);
    train = scaler.transform(train);
    queries = scaler.transform(queries);
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output);

  nlohmann::json json_rows = nlohmann::json::array();
  if (!as_json) {
    out << "prediction,expected_class,min_dist,area\n";
  }

  if (algorithm == "knn") {
    const auto model = aknn::KnnModel::fit(train, {k, metric.build(), gc});
    for (const auto& instance : queries.instances) {
      const auto nbrs = model.neighbors(instance.features);
      const auto label = aknn::majority_label(nbrs);
      if (as_json) {
        json_rows.push_back({{"prediction", label},
                             {"expected_class", label},
                             {"min_dist", nbrs.front().distance}});
      } else {
        out << label << ',' << label << ','
            << aknn::format_double(nbrs.front().distance) << ",\n";
      }
    }
  } else {
    const auto model =
        aknn::AknnModel::fit(train, {k, metric.build(), gc}, parse_mode(mode));
    print_warnings(model);
    for (const auto& instance : queries.instances) {
      const auto p = model.classify(instance.features);
      const std::string label = p.label().value_or(aknn::kUnknownLabel);
      if (as_json) {
        json_rows.push_back({{"prediction", label},
                             {"expected_class", p.expected_class},
                             {"min_dist", p.min_dist},
                             {"area", p.area_of_expected},
                             {"neighbor_indices", p.neighbor_indices}});
      } else {
        out << label << ',' << p.expected_class << ','
            << aknn::format_double(p.min_dist) << ','
            << aknn::format_double(p.area_of_expected) << '\n';
      }
    }
  }
  if (as_json) {
    out << json_rows.dump(2) << '\n';
  }
  return 0;
}

int cmd_generate_unknowns(const std::string& train_path, const CsvFlags& csv,
                          const MetricFlags& metric, std::size_t count,
                          std::uint64_t seed, double near_factor,
                          double far_factor, double gc,
                          const std::string& output) {
  const Dataset train = aknn::load_csv(train_path, csv.build());
  const auto model = aknn::AknnModel::fit(train, {1, metric.build(), gc});
  print_warnings(model);

  aknn::UnknownGenSpec spec;
  spec.count = count;
  spec.seed = seed;
  spec.near_factor = near_factor;
  spec.far_factor = far_factor;
  const Dataset unknowns = aknn::generate_unknowns(train, model, spec);

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  aknn::save_csv(unknowns, out);
  if (!output.empty()) {
    std::cout << unknowns.size() << " unknown instances written to " << output
              << '\n';
  }
  return 0;
}

int cmd_experiment(const std::string& input, const CsvFlags& csv,
                   const MetricFlags& metric, std::vector<std::size_t> ks,
                   std::vector<double> gcs, double fraction,
                   std::uint64_t seed, bool stratified, std::size_t unknowns,
                   double near_factor, double far_factor,
                   const std::string& mode, bool no_knn, bool normalize,
                   bool as_json, bool as_csv, const std::string& output) {
  const Dataset data = aknn::load_csv(input, csv.build());

  aknn::RunConfig cfg;
  cfg.k_values = std::move(ks);
  cfg.gc_values = std::move(gcs);
  cfg.metric = metric.build();
  cfg.split = {fraction, seed, stratified};
  cfg.unknowns.count = unknowns;
  cfg.unknowns.seed = seed + 1;  // independent stream from the split
  cfg.unknowns.near_factor = near_factor;
  cfg.unknowns.far_factor = far_factor;
  cfg.include_plain_knn = !no_knn;
  cfg.mode = parse_mode(mode);

  auto [train, test] = aknn::split(data, cfg.split);
  if (normalize) {
    const auto scaler = aknn::MinMaxScaler::fit(train);
    train = scaler.transform(train);
    test = scaler.transform(test);
  }

  const auto reference = aknn::AknnModel::fit(
      train, {1, cfg.metric, aknn::kUnknownGenReferenceGc}, cfg.mode);
  print_warnings(reference);
  const Dataset generated =
      aknn::generate_unknowns(train, reference, cfg.unknowns);

  const auto report = aknn::run_experiment(train, test, generated, cfg);

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  if (as_json) {
    out << aknn::report_to_json(report) << '\n';
  } else if (as_csv) {
    out << aknn::report_to_csv(report);
  } else {
    out << aknn::report_to_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-nearest-neighbour classification with open-set rejection"};
  app.require_subcommand(1);

  // fit
  auto* fit = app.add_subcommand(
      "fit", "Fit a model and print its per-class rejection regions");
  std::string fit_train;
  CsvFlags fit_csv;
  MetricFlags fit_metric;
  std::size_t fit_k = 1;
  double fit_gc = 1.5;
  std::string fit_mode = "global-min";
  bool fit_normalize = false, fit_json = false;
  fit->add_option("--train", fit_train, "Training CSV")->required();
  fit->add_option("--k", fit_k, "Neighbor count")->capture_default_str();
  fit->add_option("--gc", fit_gc, "Gap constant (> 0)")->capture_default_str();
  add_metric_flags(fit, fit_metric);
  add_csv_flags(fit, fit_csv);
  fit->add_option("--mode", fit_mode, "min_dist selection rule")
      ->check(CLI::IsMember({"global-min", "expected-class-min"}))
      ->capture_default_str();
  fit->add_flag("--normalize", fit_normalize, "Min-max scale features");
  fit->add_flag("--json", fit_json, "JSON output");

  // split
  auto* split_cmd =
      app.add_subcommand("split", "Split a CSV into train and test files");
  std::string split_input, split_train_out, split_test_out;
  CsvFlags split_csv;
  double split_fraction = 0.7;
  std::uint64_t split_seed = 0;
  bool split_stratified = false;
  split_cmd->add_option("--input", split_input, "Dataset CSV")->required();
  split_cmd->add_option("--fraction", split_fraction, "Training fraction in (0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  split_cmd->add_option("--seed", split_seed, "Shuffle seed")
      ->capture_default_str();
  split_cmd->add_flag("--stratified", split_stratified,
                      "Preserve per-class proportions");
  split_cmd->add_option("--train-out", split_train_out,
                        "Output path (default <input>_train.csv)");
  split_cmd->add_option("--test-out", split_test_out,
                        "Output path (default <input>_test.csv)");
  add_csv_flags(split_cmd, split_csv);

  // predict
  auto* predict =
      app.add_subcommand("predict", "Classify query rows against a training CSV");
  std::string pred_train, pred_queries, pred_algorithm = "aknn",
              pred_mode = "global-min", pred_output;
  CsvFlags pred_csv;
  MetricFlags pred_metric;
  std::size_t pred_k = 1;
  double pred_gc = 1.5;
  bool pred_normalize = false, pred_json = false;
  predict->add_option("--train", pred_train, "Training CSV")->required();
  predict->add_option("--queries", pred_queries, "Query CSV")->required();
  predict->add_option("--algorithm", pred_algorithm, "Classifier")
      ->check(CLI::IsMember({"aknn", "knn"}))
      ->capture_default_str();
  predict->add_option("--k", pred_k, "Neighbor count")->capture_default_str();
  predict->add_option("--gc", pred_gc, "Gap constant (> 0)")
      ->capture_default_str();
  add_metric_flags(predict, pred_metric);
  add_csv_flags(predict, pred_csv);
  predict->add_option("--mode", pred_mode, "min_dist selection rule")
      ->check(CLI::IsMember({"global-min", "expected-class-min"}))
      ->capture_default_str();
  predict->add_flag("--normalize", pred_normalize, "Min-max scale features");
  predict->add_flag("--json", pred_json, "JSON output");
  predict->add_option("--output", pred_output, "Write to file instead of stdout");

  // generate-unknowns
  auto* gen = app.add_subcommand(
      "generate-unknowns", "Synthesize open-set points far from every class");
  std::string gen_train, gen_output = "unknowns.csv";
  CsvFlags gen_csv;
  MetricFlags gen_metric;
  std::size_t gen_count = 20;
  std::uint64_t gen_seed = 0;
  double gen_near = 2.0, gen_far = 5.0, gen_gc = aknn::kUnknownGenReferenceGc;
  gen->add_option("--train", gen_train, "Training CSV")->required();
  gen->add_option("--count", gen_count, "Instances to generate")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Sampling seed")->capture_default_str();
  gen->add_option("--near-factor", gen_near,
                  "Minimum distance multiple of the largest class area (> 1)")
      ->capture_default_str();
  gen->add_option("--far-factor", gen_far,
                  "Maximum sampling radius multiple (>= near-factor)")
      ->capture_default_str();
  gen->add_option("--gc", gen_gc, "Gap constant of the reference model")
      ->capture_default_str();
  add_metric_flags(gen, gen_metric);
  add_csv_flags(gen, gen_csv);
  gen->add_option("--output", gen_output, "Output CSV ('' for stdout)")
      ->capture_default_str();

  // experiment
  auto* exp = app.add_subcommand(
      "experiment",
      "Split, inject generated unknowns, and sweep the (k, gc) grid");
  std::string exp_input, exp_mode = "global-min", exp_output;
  CsvFlags exp_csv;
  MetricFlags exp_metric;
  std::vector<std::size_t> exp_ks{1, 7};
  std::vector<double> exp_gcs{1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 1000.0};
  double exp_fraction = 0.7, exp_near = 2.0, exp_far = 5.0;
  std::uint64_t exp_seed = 0;
  std::size_t exp_unknowns = 20;
  bool exp_stratified = false, exp_no_knn = false, exp_normalize = false,
       exp_json = false, exp_as_csv = false;
  exp->add_option("--input", exp_input, "Dataset CSV")->required();
  exp->add_option("--k", exp_ks, "Neighbor counts to sweep")
      ->delimiter(',')
      ->capture_default_str();
  exp->add_option("--gc", exp_gcs, "Gap constants to sweep")
      ->delimiter(',')
      ->capture_default_str();
  exp->add_option("--fraction", exp_fraction, "Training fraction in (0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  exp->add_option("--seed", exp_seed, "Split/generation seed")
      ->capture_default_str();
  exp->add_flag("--stratified", exp_stratified,
                "Stratify the train/test split");
  exp->add_option("--unknowns", exp_unknowns, "Unknown instances to inject")
      ->capture_default_str();
  exp->add_option("--near-factor", exp_near, "Unknown generation near factor")
      ->capture_default_str();
  exp->add_option("--far-factor", exp_far, "Unknown generation far factor")
      ->capture_default_str();
  add_metric_flags(exp, exp_metric);
  add_csv_flags(exp, exp_csv);
  exp->add_option("--mode", exp_mode, "min_dist selection rule")
      ->check(CLI::IsMember({"global-min", "expected-class-min"}))
      ->capture_default_str();
  exp->add_flag("--no-knn", exp_no_knn, "Skip the plain kNN baseline rows");
  exp->add_flag("--normalize", exp_normalize, "Min-max scale features");
  exp->add_flag("--json", exp_json, "JSON report");
  exp->add_flag("--csv", exp_as_csv, "CSV report");
  exp->add_option("--output", exp_output, "Write report to file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit->parsed()) {
      return cmd_fit(fit_train, fit_csv, fit_metric, fit_k, fit_gc, fit_mode,
                     fit_normalize, fit_json);
    }
    if (split_cmd->parsed()) {
      return cmd_split(split_input, split_csv, split_fraction, split_seed,
                       split_stratified, split_train_out, split_test_out);
    }
    if (predict->parsed()) {
      return cmd_predict(pred_train, pred_queries, pred_csv, pred_metric,
                         pred_algorithm, pred_k, pred_gc, pred_mode,
                         pred_normalize, pred_json, pred_output);
    }
    if (gen->parsed()) {
      return cmd_generate_unknowns(gen_train, gen_csv, gen_metric, gen_count,
                                   gen_seed, gen_near, gen_far, gen_gc,
                                   gen_output);
    }
    if (exp->parsed()) {
      return cmd_experiment(exp_input, exp_csv, exp_metric, exp_ks, exp_gcs,
                            exp_fraction, exp_seed, exp_stratified,
                            exp_unknowns, exp_near, exp_far, exp_mode,
                            exp_no_knn, exp_normalize, exp_json, exp_as_csv,
                            exp_output);
    }
  } catch (const aknn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
