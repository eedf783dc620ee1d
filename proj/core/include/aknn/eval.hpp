#pragma once

#include <map>
#include <optional>

#include "aknn/aknn.hpp"
#include "aknn/split.hpp"
#include "aknn/unknowns.hpp"

namespace aknn {

enum class Algorithm { Knn, Aknn };

const char* to_string(Algorithm a);

/// Grid definition for one experiment run: every k in k_values crossed with
/// every gc in gc_values, optionally preceded by a plain-kNN baseline row
/// per k.
struct RunConfig {
  std::vector<std::size_t> k_values{1, 7};
  std::vector<double> gc_values{1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 1000.0};
  DistanceMetric metric = DistanceMetric::euclidean();
  SplitSpec split;
  UnknownGenSpec unknowns;
  bool include_plain_knn = true;
  MinDistMode mode = MinDistMode::GlobalMin;
};

struct ReportRow {
  Algorithm algorithm = Algorithm::Aknn;
  std::size_t k = 1;
  std::optional<double> gc;  // empty for plain-kNN rows
  double accuracy_without_unknowns = 0.0;
  double accuracy_with_unknowns = 0.0;
  std::size_t misclassified_unknown_total = 0;
  std::map<Label, std::size_t> misclassified_unknown_by_label;
};

struct RunReport {
  std::vector<ReportRow> rows;
  std::vector<Label> labels;  // training alphabet, sorted
  std::size_t train_size = 0;
  std::size_t test_known_size = 0;
  std::size_t unknown_count = 0;
};

/// Fraction of positions where the prediction matches the truth token. An
/// Unknown outcome matches exactly the reserved "unknown" token; Known(L)
/// matches truth L. Throws LengthMismatch on unequal or empty inputs.
double accuracy(const std::vector<Prediction>& predictions,
                const std::vector<Label>& truth);
double accuracy(const std::vector<Label>& predictions,
                const std::vector<Label>& truth);

struct UnknownBreakdown {
  std::size_t total = 0;
  std::map<Label, std::size_t> by_label;  // only labels actually predicted

  std::size_t count_for(const Label& label) const;
};

/// Among positions whose truth is the reserved "unknown" token, counts those
/// predicted as a known class, bucketed by the predicted label.
UnknownBreakdown count_misclassified_unknowns(
    const std::vector<Prediction>& predictions,
    const std::vector<Label>& truth);
UnknownBreakdown count_misclassified_unknowns(
    const std::vector<Label>& predictions, const std::vector<Label>& truth);

/// Evaluates the full (algorithm, k, gc) grid on pre-built train/test sets.
/// Row order: for each k, the kNN baseline (when enabled) followed by one
/// A-kNN row per gc in the configured order.
RunReport run_experiment(const Dataset& train, const Dataset& test_known,
                         const Dataset& test_unknown, const RunConfig& cfg);

/// Gap constant of the reference model that unknown generation measures
/// class areas against.
inline constexpr double kUnknownGenReferenceGc = 1.5;

struct ExperimentData {
  Dataset train;
  Dataset test_known;
  Dataset test_unknown;
  RunReport report;
};

/// One-call pipeline: split per cfg.split, generate cfg.unknowns.count
/// open-set points against a reference model at gc = 1.5, then run the grid.
ExperimentData run_full_experiment(const Dataset& data, const RunConfig& cfg);

std::string report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);
std::string report_to_csv(const RunReport& report);

}  // namespace aknn
