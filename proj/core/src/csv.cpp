#include "aknn/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "aknn/error.hpp"

namespace aknn {
namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.pop_back();
  }
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
    ++i;
  }
  return s.substr(i);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parse_cell(const std::string& cell, const std::string& origin,
                  std::size_t line_no, std::size_t col_no) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || cell.empty()) {
    raise(ErrorCode::ParseError,
          origin + ": line " + std::to_string(line_no) + ", column " +
              std::to_string(col_no) + ": cannot parse \"" + cell +
              "\" as a number");
  }
  return value;
}

struct RawTable {
  std::vector<std::string> header;  // empty when has_header is false
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // per data row, 1-based
  std::size_t width = 0;
};

RawTable read_table(std::istream& in, bool has_header,
                    const std::string& origin) {
  RawTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    auto fields = split_fields(line);
    if (header_pending) {
      table.header = std::move(fields);
      table.width = table.header.size();
      header_pending = false;
      continue;
    }
    if (table.width == 0) {
      table.width = fields.size();
    } else if (fields.size() != table.width) {
      raise(ErrorCode::InconsistentColumns,
            origin + ": line " + std::to_string(line_no) + " has " +
                std::to_string(fields.size()) + " columns, expected " +
                std::to_string(table.width));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  return table;
}

std::size_t resolve_label_column(const LabelColumn& column,
                                 const RawTable& table,
                                 const std::string& origin) {
  if (std::holds_alternative<std::monostate>(column.ref)) {
    return table.width - 1;
  }
  if (const auto* index = std::get_if<std::size_t>(&column.ref)) {
    if (*index >= table.width) {
      raise(ErrorCode::InvalidArgument,
            origin + ": label column index " + std::to_string(*index) +
                " out of range for " + std::to_string(table.width) +
                " columns");
    }
    return *index;
  }
  const auto& name = std::get<std::string>(column.ref);
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == name) {
      return i;
    }
  }
  raise(ErrorCode::InvalidArgument,
        origin + ": no header column named \"" + name + "\"");
}

void check_token(const std::string& token, const char* what) {
  if (token.find(',') != std::string::npos ||
      token.find('\n') != std::string::npos) {
    raise(ErrorCode::InvalidArgument,
          std::string(what) + " \"" + token +
              "\" contains a separator character");
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return {buf, ptr};
}

Dataset load_csv(std::istream& in, const CsvReadOptions& opts,
                 const std::string& origin) {
  RawTable table = read_table(in, opts.has_header, origin);
  if (table.rows.empty()) {
    if (opts.allow_empty) {
      Dataset empty;
      empty.dim = table.width > 1 ? table.width - 1 : 0;
      return empty;
    }
    raise(ErrorCode::EmptyFile, origin + ": no data rows");
  }
  if (table.width < 2) {
    raise(ErrorCode::ParseError,
          origin + ": need at least one feature column plus a label column");
  }
  const std::size_t label_col = resolve_label_column(opts.label_column, table, origin);

  Dataset d;
  d.dim = table.width - 1;
  d.instances.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    Instance instance;
    instance.features.reserve(d.dim);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == label_col) {
        continue;
      }
      instance.features.push_back(
          parse_cell(row[c], origin, table.line_numbers[r], c + 1));
    }
    const std::string& token = row[label_col];
    const bool reserved = opts.reserved_unknown && token == kUnknownLabel;
    if (!token.empty() && !reserved) {
      instance.label = token;
    }
    d.instances.push_back(std::move(instance));
  }
  return d;
}

Dataset load_csv(const std::filesystem::path& path,
                 const CsvReadOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::InvalidArgument,
          "cannot open \"" + path.string() + "\" for reading");
  }
  return load_csv(in, opts, path.string());
}

Dataset load_features_csv(const std::filesystem::path& path, bool has_header,
                          bool allow_empty) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::InvalidArgument,
          "cannot open \"" + path.string() + "\" for reading");
  }
  const std::string origin = path.string();
  RawTable table = read_table(in, has_header, origin);
  if (table.rows.empty()) {
    if (allow_empty) {
      Dataset empty;
      empty.dim = table.width;
      return empty;
    }
    raise(ErrorCode::EmptyFile, origin + ": no data rows");
  }
  Dataset d;
  d.dim = table.width;
  d.instances.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    Instance instance;
    instance.features.reserve(d.dim);
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      instance.features.push_back(
          parse_cell(table.rows[r][c], origin, table.line_numbers[r], c + 1));
    }
    d.instances.push_back(std::move(instance));
  }
  return d;
}

void save_csv(const Dataset& d, std::ostream& out,
              const CsvWriteOptions& opts) {
  std::vector<std::string> names = opts.feature_names;
  if (names.empty()) {
    for (std::size_t i = 0; i < d.dim; ++i) {
      names.push_back("f" + std::to_string(i));
    }
  }
  if (names.size() != d.dim) {
    raise(ErrorCode::InvalidArgument,
          "expected " + std::to_string(d.dim) + " feature names, got " +
              std::to_string(names.size()));
  }
  if (opts.write_header) {
    for (const auto& name : names) {
      check_token(name, "column name");
      out << name << ',';
    }
    check_token(opts.label_name, "column name");
    out << opts.label_name << '\n';
  }
  for (const auto& instance : d.instances) {
    if (instance.features.size() != d.dim) {
      raise(ErrorCode::DimensionMismatch,
            "instance feature count differs from dataset dim");
    }
    for (double x : instance.features) {
      out << format_double(x) << ',';
    }
    if (instance.label) {
      check_token(*instance.label, "label");
      out << *instance.label;
    }
    out << '\n';
  }
}

void save_csv(const Dataset& d, const std::filesystem::path& path,
              const CsvWriteOptions& opts) {
  std::ofstream out(path);
  if (!out) {
    raise(ErrorCode::InvalidArgument,
          "cannot open \"" + path.string() + "\" for writing");
  }
  save_csv(d, out, opts);
  out.flush();
  if (!out) {
    raise(ErrorCode::InvalidArgument,
          "failed while writing \"" + path.string() + "\"");
  }
}

}  // namespace aknn
