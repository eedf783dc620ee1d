#include "aknn/csv.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aknn/error.hpp"
#include "test_support.hpp"

using aknn::CsvReadOptions;
using aknn::Dataset;
using aknn::ErrorCode;
using aknn::Label;
using aknn::LabelColumn;

namespace {

std::filesystem::path data_dir() { return AKNN_DATA_DIR; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

Dataset from_string(const std::string& text, const CsvReadOptions& opts = {}) {
  std::istringstream in(text);
  return aknn::load_csv(in, opts, "<memory>");
}

}  // namespace

TEST(LoadCsv, IrisShape) {
  const Dataset iris = aknn::load_csv(data_dir() / "iris.csv");
  EXPECT_EQ(iris.size(), 150u);
  EXPECT_EQ(iris.dim, 4u);
  EXPECT_EQ(iris.label_alphabet(),
            (std::vector<Label>{"setosa", "versicolor", "virginica"}));
  EXPECT_TRUE(iris.fully_labeled());
}

TEST(LoadCsv, EmployeeDemoShape) {
  const Dataset d = aknn::load_csv(data_dir() / "demo_train.csv");
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(d.label_alphabet(), (std::vector<Label>{"G", "N"}));
}

// Shape of the mid-size binary benchmark layout: 345 rows, 6 features,
// 2 classes.
TEST(LoadCsv, MidSizeBinaryShape) {
  aknn::rng::Engine g(61);
  Dataset d = ts::random_dataset(g, 345, 6, 2);
  for (auto& instance : d.instances) {
    instance.label = *instance.label == "c0" ? "1" : "2";
  }
  const auto path = temp_file("binary345.csv");
  aknn::save_csv(d, path);

  const Dataset loaded = aknn::load_csv(path);
  EXPECT_EQ(loaded.size(), 345u);
  EXPECT_EQ(loaded.dim, 6u);
  EXPECT_EQ(loaded.label_alphabet(), (std::vector<Label>{"1", "2"}));
}

TEST(LoadCsv, TextInFeatureCellNamesTheCell) {
  try {
    from_string("a,b,label\n1,2,x\n1,oops,y\n");
    FAIL() << "expected ParseError";
  } catch (const aknn::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("column 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("oops"), std::string::npos);
  }
}

TEST(LoadCsv, InconsistentColumnCountsRejected) {
  EXPECT_TRUE(ts::throws_error(ErrorCode::InconsistentColumns, [] {
    from_string("a,b,label\n1,2,x\n1,2,3,x\n");
  }));
}

TEST(LoadCsv, EmptyInputsRejectedUnlessAllowed) {
  EXPECT_TRUE(ts::throws_error(ErrorCode::EmptyFile, [] { from_string(""); }));
  EXPECT_TRUE(ts::throws_error(ErrorCode::EmptyFile,
                               [] { from_string("a,b,label\n"); }));

  CsvReadOptions allow;
  allow.allow_empty = true;
  const Dataset empty = from_string("a,b,label\n", allow);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(empty.dim, 2u);
}

TEST(LoadCsv, HeaderlessFile) {
  CsvReadOptions opts;
  opts.has_header = false;
  const Dataset d = from_string("1,2,x\n3,4,y\n", opts);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(d.instances[0].features, (aknn::FeatureVector{1, 2}));
}

TEST(LoadCsv, LabelColumnByIndexAndName) {
  CsvReadOptions by_index;
  by_index.label_column = LabelColumn::index(0);
  const Dataset d = from_string("label,a,b\nx,1,2\ny,3,4\n", by_index);
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(*d.instances[0].label, "x");
  EXPECT_EQ(d.instances[1].features, (aknn::FeatureVector{3, 4}));

  CsvReadOptions by_name;
  by_name.label_column = LabelColumn::name("species");
  const Dataset e = from_string("species,a,b\nx,1,2\n", by_name);
  EXPECT_EQ(*e.instances[0].label, "x");

  CsvReadOptions missing;
  missing.label_column = LabelColumn::name("nope");
  EXPECT_TRUE(ts::throws_error(ErrorCode::InvalidArgument, [&] {
    from_string("species,a,b\nx,1,2\n", missing);
  }));
}

TEST(LoadCsv, ReservedUnknownTokenIsOptIn) {
  const std::string text = "a,b,label\n1,2,unknown\n3,4,real\n";
  const Dataset ordinary = from_string(text);
  EXPECT_EQ(ordinary.label_alphabet(),
            (std::vector<Label>{"real", aknn::kUnknownLabel}));

  CsvReadOptions reserved;
  reserved.reserved_unknown = true;
  const Dataset flagged = from_string(text, reserved);
  EXPECT_FALSE(flagged.instances[0].label.has_value());
  EXPECT_EQ(*flagged.instances[1].label, "real");
}

TEST(LoadCsv, EmptyLabelCellLoadsUnlabeled) {
  const Dataset d = from_string("a,b,label\n1,2,\n3,4,x\n");
  EXPECT_FALSE(d.instances[0].label.has_value());
  EXPECT_TRUE(d.instances[1].label.has_value());
}

TEST(LoadCsv, SingleColumnRejected) {
  EXPECT_TRUE(ts::throws_error(ErrorCode::ParseError,
                               [] { from_string("label\nx\n"); }));
}

TEST(LoadCsv, MissingFileRejected) {
  EXPECT_TRUE(ts::throws_error(ErrorCode::InvalidArgument, [] {
    aknn::load_csv("/nonexistent/never.csv");
  }));
}

TEST(SaveCsv, RoundTripIsBitExact) {
  aknn::rng::Engine g(67);
  Dataset d = ts::random_dataset(g, 60, 3, 3, -1e6, 1e6);
  // Awkward exact values alongside the random ones.
  d.instances[0].features = {1.0 / 3.0, 1e-300, -0.0};
  d.instances[1].features = {6.02214076e23, -2.5e-7, 0.1};
  d.instances[2].label.reset();

  const auto path = temp_file("roundtrip.csv");
  aknn::save_csv(d, path);
  const Dataset loaded = aknn::load_csv(path);

  ASSERT_EQ(loaded.size(), d.size());
  ASSERT_EQ(loaded.dim, d.dim);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ASSERT_EQ(loaded.instances[i].label, d.instances[i].label);
    for (std::size_t j = 0; j < d.dim; ++j) {
      const double a = d.instances[i].features[j];
      const double b = loaded.instances[i].features[j];
      ASSERT_EQ(std::memcmp(&a, &b, sizeof(double)), 0)
          << "row " << i << " col " << j;
    }
  }
}

TEST(SaveCsv, HeaderNamesAreWritten) {
  Dataset d;
  d.dim = 2;
  d.instances = {{{1.5, 2.5}, Label("x")}};
  std::ostringstream out;
  aknn::CsvWriteOptions opts;
  opts.feature_names = {"alpha", "beta"};
  opts.label_name = "kind";
  aknn::save_csv(d, out, opts);
  EXPECT_EQ(out.str(), "alpha,beta,kind\n1.5,2.5,x\n");
}

TEST(SaveCsv, LabelWithSeparatorRejected) {
  Dataset d;
  d.dim = 1;
  d.instances = {{{1.0}, Label("a,b")}};
  std::ostringstream out;
  EXPECT_TRUE(ts::throws_error(ErrorCode::InvalidArgument,
                               [&] { aknn::save_csv(d, out); }));
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(aknn::format_double(1.0), "1");
  EXPECT_EQ(aknn::format_double(0.1), "0.1");
  EXPECT_EQ(aknn::format_double(-0.0), "-0");
}
