#include "aknn/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "aknn/csv.hpp"
#include "aknn/error.hpp"

namespace aknn {
namespace {

void check_lengths(std::size_t predictions, std::size_t truth) {
  if (predictions != truth || predictions == 0) {
    raise(ErrorCode::LengthMismatch,
          "predictions (" + std::to_string(predictions) + ") and truth (" +
              std::to_string(truth) + ") must be equal-length and non-empty");
  }
}

std::vector<Label> truth_of(const Dataset& d) {
  std::vector<Label> truth;
  truth.reserve(d.size());
  for (const auto& instance : d.instances) {
    if (!instance.label) {
      raise(ErrorCode::UnlabeledInstance,
            "evaluation requires labeled test instances");
    }
    truth.push_back(*instance.label);
  }
  return truth;
}

// Accuracy rendered the way result tables print it: at most three decimals,
// trailing zeros trimmed.
std::string format_accuracy(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

struct Cell {
  std::vector<Prediction> known;
  std::vector<Prediction> unknown;
};

ReportRow make_row(Algorithm algorithm, std::size_t k,
                   std::optional<double> gc,
                   const std::vector<Prediction>& preds_known,
                   const std::vector<Prediction>& preds_unknown,
                   const std::vector<Label>& truth_known,
                   const std::vector<Label>& truth_unknown,
                   const std::vector<Label>& alphabet) {
  ReportRow row;
  row.algorithm = algorithm;
  row.k = k;
  row.gc = gc;
  row.accuracy_without_unknowns = accuracy(preds_known, truth_known);

  std::vector<Prediction> all_preds = preds_known;
  all_preds.insert(all_preds.end(), preds_unknown.begin(), preds_unknown.end());
  std::vector<Label> all_truth = truth_known;
  all_truth.insert(all_truth.end(), truth_unknown.begin(), truth_unknown.end());
  row.accuracy_with_unknowns = accuracy(all_preds, all_truth);

  for (const auto& label : alphabet) {
    row.misclassified_unknown_by_label[label] = 0;
  }
  if (!preds_unknown.empty()) {
    const auto breakdown =
        count_misclassified_unknowns(preds_unknown, truth_unknown);
    row.misclassified_unknown_total = breakdown.total;
    for (const auto& [label, count] : breakdown.by_label) {
      row.misclassified_unknown_by_label[label] += count;
    }
  }
  return row;
}

}  // namespace

const char* to_string(Algorithm a) {
  return a == Algorithm::Knn ? "knn" : "aknn";
}

double accuracy(const std::vector<Prediction>& predictions,
                const std::vector<Label>& truth) {
  check_lengths(predictions.size(), truth.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predictions[i].is_unknown()) {
      hits += truth[i] == kUnknownLabel ? 1 : 0;
    } else {
      hits += predictions[i].expected_class == truth[i] ? 1 : 0;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double accuracy(const std::vector<Label>& predictions,
                const std::vector<Label>& truth) {
  check_lengths(predictions.size(), truth.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    hits += predictions[i] == truth[i] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

std::size_t UnknownBreakdown::count_for(const Label& label) const {
  auto it = by_label.find(label);
  return it == by_label.end() ? 0 : it->second;
}

UnknownBreakdown count_misclassified_unknowns(
    const std::vector<Prediction>& predictions,
    const std::vector<Label>& truth) {
  check_lengths(predictions.size(), truth.size());
  UnknownBreakdown breakdown;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == kUnknownLabel && !predictions[i].is_unknown()) {
      ++breakdown.total;
      ++breakdown.by_label[predictions[i].expected_class];
    }
  }
  return breakdown;
}

UnknownBreakdown count_misclassified_unknowns(
    const std::vector<Label>& predictions, const std::vector<Label>& truth) {
  check_lengths(predictions.size(), truth.size());
  UnknownBreakdown breakdown;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == kUnknownLabel && predictions[i] != kUnknownLabel) {
      ++breakdown.total;
      ++breakdown.by_label[predictions[i]];
    }
  }
  return breakdown;
}

RunReport run_experiment(const Dataset& train, const Dataset& test_known,
                         const Dataset& test_unknown, const RunConfig& cfg) {
  if (cfg.k_values.empty() || cfg.gc_values.empty()) {
    raise(ErrorCode::InvalidArgument,
          "k_values and gc_values must be non-empty");
  }

  const std::vector<Label> alphabet = train.label_alphabet();
  const std::set<Label> alphabet_set(alphabet.begin(), alphabet.end());
  const std::vector<Label> truth_known = truth_of(test_known);
  for (const auto& label : truth_known) {
    if (!alphabet_set.contains(label)) {
      raise(ErrorCode::InvalidArgument,
            "test label \"" + label + "\" does not occur in the training set");
    }
  }
  const std::vector<Label> truth_unknown(test_unknown.size(),
                                         Label(kUnknownLabel));

  RunReport report;
  report.labels = alphabet;
  report.train_size = train.size();
  report.test_known_size = test_known.size();
  report.unknown_count = test_unknown.size();

  for (const std::size_t k : cfg.k_values) {
    if (cfg.include_plain_knn) {
      const KnnModel knn =
          KnnModel::fit(train, {k, cfg.metric, cfg.gc_values.front()});
      // Plain kNN always commits to a known class; wrap its labels as Known
      // predictions so both algorithms flow through the same scoring.
      auto classify_all = [&](const Dataset& queries) {
        std::vector<Prediction> preds;
        preds.reserve(queries.size());
        for (const auto& instance : queries.instances) {
          Prediction p;
          p.outcome = Outcome::Known;
          p.expected_class = knn.classify(instance.features);
          preds.push_back(std::move(p));
        }
        return preds;
      };
      report.rows.push_back(make_row(
          Algorithm::Knn, k, std::nullopt, classify_all(test_known),
          classify_all(test_unknown), truth_known, truth_unknown, alphabet));
    }

    const AknnModel fitted = AknnModel::fit(
        train, {k, cfg.metric, cfg.gc_values.front()}, cfg.mode);
    for (const double gc : cfg.gc_values) {
      const AknnModel model = fitted.with_gap_constant(gc);
      auto classify_all = [&](const Dataset& queries) {
        std::vector<Prediction> preds;
        preds.reserve(queries.size());
        for (const auto& instance : queries.instances) {
          preds.push_back(model.classify(instance.features));
        }
        return preds;
      };
      report.rows.push_back(make_row(
          Algorithm::Aknn, k, gc, classify_all(test_known),
          classify_all(test_unknown), truth_known, truth_unknown, alphabet));
    }
  }
  return report;
}

ExperimentData run_full_experiment(const Dataset& data, const RunConfig& cfg) {
  ExperimentData result;
  auto [train, test] = split(data, cfg.split);
  result.train = std::move(train);
  result.test_known = std::move(test);

  const AknnModel reference = AknnModel::fit(
      result.train, {1, cfg.metric, kUnknownGenReferenceGc}, cfg.mode);
  result.test_unknown =
      generate_unknowns(result.train, reference, cfg.unknowns);

  result.report = run_experiment(result.train, result.test_known,
                                 result.test_unknown, cfg);
  return result;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json by_label = nlohmann::json::object();
    for (const auto& [label, count] : row.misclassified_unknown_by_label) {
      by_label[label] = count;
    }
    nlohmann::json j{
        {"algorithm", to_string(row.algorithm)},
        {"k", row.k},
        {"accuracy_without_unknowns", row.accuracy_without_unknowns},
        {"accuracy_with_unknowns", row.accuracy_with_unknowns},
        {"misclassified_unknown_total", row.misclassified_unknown_total},
        {"misclassified_unknown_by_label", by_label},
    };
    j["gc"] = row.gc ? nlohmann::json(*row.gc) : nlohmann::json(nullptr);
    rows.push_back(std::move(j));
  }
  nlohmann::json j{
      {"train_size", report.train_size},
      {"test_known_size", report.test_known_size},
      {"unknown_count", report.unknown_count},
      {"labels", report.labels},
      {"rows", rows},
  };
  return j.dump(2);
}

std::string report_to_text(const RunReport& report) {
  std::vector<std::string> headers{
      "k", "algorithm", "gc", "acc w/o unknowns", "acc with unknowns",
      "misclassified unknowns"};
  for (const auto& label : report.labels) {
    headers.push_back("as " + label);
  }

  std::vector<std::vector<std::string>> lines;
  for (const auto& row : report.rows) {
    std::vector<std::string> line{
        std::to_string(row.k),
        to_string(row.algorithm),
        row.gc ? format_double(*row.gc) : "-",
        format_accuracy(row.accuracy_without_unknowns),
        format_accuracy(row.accuracy_with_unknowns),
        std::to_string(row.misclassified_unknown_total)};
    for (const auto& label : report.labels) {
      const auto it = row.misclassified_unknown_by_label.find(label);
      line.push_back(std::to_string(
          it == row.misclassified_unknown_by_label.end() ? 0 : it->second));
    }
    lines.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& line : lines) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c] << std::string(widths[c] - line[c].size(), ' ');
      out << (c + 1 == line.size() ? "\n" : "  ");
    }
  };
  emit(headers);
  for (const auto& line : lines) {
    emit(line);
  }
  return out.str();
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "k,algorithm,gc,accuracy_without_unknowns,accuracy_with_unknowns,"
         "misclassified_unknown_total";
  for (const auto& label : report.labels) {
    out << ",as_" << label;
  }
  out << '\n';
  for (const auto& row : report.rows) {
    out << row.k << ',' << to_string(row.algorithm) << ','
        << (row.gc ? format_double(*row.gc) : "") << ','
        << format_double(row.accuracy_without_unknowns) << ','
        << format_double(row.accuracy_with_unknowns) << ','
        << row.misclassified_unknown_total;
    for (const auto& label : report.labels) {
      const auto it = row.misclassified_unknown_by_label.find(label);
      out << ','
          << (it == row.misclassified_unknown_by_label.end() ? 0 : it->second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace aknn
