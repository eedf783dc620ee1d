#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "aknn/types.hpp"

namespace aknn {

/// Selects the label column by 0-based index, by header name, or as the
/// last column (the default).
struct LabelColumn {
  std::variant<std::monostate, std::size_t, std::string> ref;

  static LabelColumn last() { return {}; }
  static LabelColumn index(std::size_t i) { return {i}; }
  static LabelColumn name(std::string n) { return {std::move(n)}; }
};

// Dialect: comma separator, '.' decimal point, no quoting. An empty label
// cell loads as an unlabeled instance.
struct CsvReadOptions {
  bool has_header = true;
  LabelColumn label_column = LabelColumn::last();
  /// When set, rows labeled with the reserved "unknown" token load as
  /// unlabeled instances instead of as an ordinary class.
  bool reserved_unknown = false;
  /// When set, a file without data rows yields an empty dataset instead of
  /// an EmptyFile error.
  bool allow_empty = false;
};

/// Loads a labeled dataset; dim = column count - 1. Parse failures report
/// the offending line and column.
Dataset load_csv(const std::filesystem::path& path,
                 const CsvReadOptions& opts = {});
Dataset load_csv(std::istream& in, const CsvReadOptions& opts,
                 const std::string& origin);

/// Loads a dataset where every column is a feature (no label column).
Dataset load_features_csv(const std::filesystem::path& path,
                          bool has_header = true, bool allow_empty = false);

struct CsvWriteOptions {
  bool write_header = true;
  /// Defaults to f0..f{dim-1} when empty.
  std::vector<std::string> feature_names;
  std::string label_name = "label";
};

/// Writes the comma dialect above. Features are printed with shortest
/// round-trip precision, so load_csv(save_csv(d)) reproduces d bit-exactly.
void save_csv(const Dataset& d, const std::filesystem::path& path,
              const CsvWriteOptions& opts = {});
void save_csv(const Dataset& d, std::ostream& out,
              const CsvWriteOptions& opts = {});

/// Shortest decimal form of x that parses back to the same double.
std::string format_double(double x);

}  // namespace aknn
