// End-to-end acceptance suite. One test per release criterion, each with its
// tolerance and runtime budget pinned in code; the runner's per-test output
// is the pass/fail line.

#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aknn/aknn.hpp"
#include "aknn/csv.hpp"
#include "aknn/eval.hpp"
#include "aknn/split.hpp"
#include "aknn/synthetic.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using aknn::AknnModel;
using aknn::Dataset;
using aknn::DistanceMetric;
using aknn::KnnModel;
using aknn::Label;
using aknn::Outcome;
using aknn::RunConfig;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

Dataset iris() {
  return aknn::load_csv(std::filesystem::path(AKNN_DATA_DIR) / "iris.csv");
}

}  // namespace

// Criterion 1: the four-employee worked example, end to end. Nearest
// distances 41.01 / 45.01 / 241.25 / 258.02 within 0.02; rejection verdicts
// Known(N), Known(G), Unknown, Unknown; plain kNN says N, G, N, G.
TEST(Acceptance, EmployeeWorkedExampleGolden) {
  const Stopwatch watch;

  const auto train = ts::employee_train();
  const auto queries = ts::employee_queries();
  const auto knn = KnnModel::fit(train, {1, DistanceMetric::euclidean()});
  const auto model =
      AknnModel::fit(train, {1, DistanceMetric::euclidean(), 1.5});

  const double expected_dist[] = {41.01, 45.01, 241.25, 258.02};
  for (int i = 0; i < 4; ++i) {
    const auto nbrs = knn.neighbors(queries[i]);
    ASSERT_EQ(nbrs.size(), 1u);
    EXPECT_NEAR(nbrs[0].distance, expected_dist[i], 0.02) << "query " << i;
  }

  const Outcome expected_outcome[] = {Outcome::Known, Outcome::Known,
                                      Outcome::Unknown, Outcome::Unknown};
  const Label expected_class[] = {"N", "G", "N", "G"};
  for (int i = 0; i < 4; ++i) {
    const auto p = model.classify(queries[i]);
    EXPECT_EQ(p.outcome, expected_outcome[i]) << "query " << i;
    EXPECT_EQ(p.expected_class, expected_class[i]) << "query " << i;
  }

  const Label knn_expected[] = {"N", "G", "N", "G"};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(knn.classify(queries[i]), knn_expected[i]) << "query " << i;
  }

  EXPECT_LT(watch.seconds(), 1.0);
}

// Criterion 2: class rejection areas of the worked example at gc = 1.5:
// area(G) = 193.5 +- 0.1, area(N) = 64.5 +- 0.2.
TEST(Acceptance, EmployeeClassAreasGolden) {
  const Stopwatch watch;
  const auto model = AknnModel::fit(ts::employee_train(),
                                    {1, DistanceMetric::euclidean(), 1.5});
  EXPECT_NEAR(model.region("G").area, 193.5, 0.1);
  EXPECT_NEAR(model.region("N").area, 64.5, 0.2);
  EXPECT_LT(watch.seconds(), 1.0);
}

// Criterion 3: iris trends over 20 seeds with 70:30 splits and 20 generated
// unknowns. (a) plain-kNN mean accuracy on known test data >= 0.90;
// (b) plain kNN misses all 20 unknowns in every run; (c) rejection at
// gc in {1, 1.5} misses none; (d) per run the miss count is non-decreasing
// across the gc ladder.
TEST(Acceptance, IrisTrendReproduction) {
  const Stopwatch watch;
  const Dataset data = iris();

  double knn_accuracy_sum = 0.0;
  std::size_t knn_rows = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunConfig cfg;  // defaults: k {1,7}, gc {1,...,1000}, 20 unknowns
    cfg.split.seed = seed;
    cfg.unknowns.seed = seed + 1000;
    const auto report = aknn::run_full_experiment(data, cfg).report;

    for (const std::size_t k : cfg.k_values) {
      std::size_t previous = 0;
      for (const auto& row : report.rows) {
        if (row.k != k) continue;
        if (row.algorithm == aknn::Algorithm::Knn) {
          knn_accuracy_sum += row.accuracy_without_unknowns;
          ++knn_rows;
          EXPECT_EQ(row.misclassified_unknown_total, 20u)
              << "seed " << seed << " k " << k;
        } else {
          if (*row.gc <= 1.5) {
            EXPECT_EQ(row.misclassified_unknown_total, 0u)
                << "seed " << seed << " k " << k << " gc " << *row.gc;
          }
          EXPECT_GE(row.misclassified_unknown_total, previous)
              << "seed " << seed << " k " << k << " gc " << *row.gc;
          previous = row.misclassified_unknown_total;
        }
      }
    }
  }
  ASSERT_EQ(knn_rows, 40u);
  EXPECT_GE(knn_accuracy_sum / static_cast<double>(knn_rows), 0.90);

  EXPECT_LT(watch.seconds(), 30.0);
}

// Criterion 4: on every dataset, query, and gc, the open-set outcome is
// either Unknown or exactly the plain-kNN label; at gc = 1e9 with every
// class diameter positive the two classifiers agree on 100% of queries.
TEST(Acceptance, RejectOrAgreeEquivalence) {
  const Stopwatch watch;

  struct Case {
    Dataset train;
    Dataset queries;
  };
  std::vector<Case> cases;

  const auto iris_split = aknn::split(iris(), {0.7, 11, false});
  cases.push_back({iris_split.train, iris_split.test});

  const auto blob_split =
      aknn::split(aknn::make_two_blob_dataset(199, 4), {0.7, 12, false});
  cases.push_back({blob_split.train, blob_split.test});

  aknn::rng::Engine g(101);
  for (int i = 0; i < 3; ++i) {
    Case c;
    c.train = ts::random_dataset(g, 40, 3, 3);
    c.queries = ts::random_dataset(g, 30, 3, 3, -30.0, 30.0);
    cases.push_back(std::move(c));
  }

  const double gc_ladder[] = {1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 1000.0};
  for (const auto& c : cases) {
    for (const std::size_t k : {std::size_t{1}, std::size_t{7}}) {
      const auto knn = KnnModel::fit(c.train, {k, DistanceMetric::euclidean()});
      const auto fitted =
          AknnModel::fit(c.train, {k, DistanceMetric::euclidean(), 1.0});
      for (const double gc : gc_ladder) {
        const auto model = fitted.with_gap_constant(gc);
        for (const auto& q : c.queries.instances) {
          const auto p = model.classify(q.features);
          if (!p.is_unknown()) {
            ASSERT_EQ(*p.label(), knn.classify(q.features));
          }
        }
      }

      for (const auto& [label, region] : fitted.regions()) {
        ASSERT_GT(region.tca, 0.0) << label;
      }
      const auto widest = fitted.with_gap_constant(1e9);
      for (const auto& q : c.queries.instances) {
        const auto p = widest.classify(q.features);
        ASSERT_FALSE(p.is_unknown());
        ASSERT_EQ(*p.label(), knn.classify(q.features));
      }
    }
  }

  EXPECT_LT(watch.seconds(), 10.0);
}

// Criterion 5: metric axioms on 10,000 random triples per metric
// (dims 1-8, Minkowski q in {1, 1.5, 2, 3}), 1e-9 relative tolerance, plus
// the Minkowski q=1 / q=2 coincidences with Manhattan / Euclidean.
TEST(Acceptance, MetricAxioms) {
  const Stopwatch watch;

  const DistanceMetric metrics[] = {
      DistanceMetric::euclidean(),     DistanceMetric::manhattan(),
      DistanceMetric::minkowski(1.0),  DistanceMetric::minkowski(1.5),
      DistanceMetric::minkowski(2.0),  DistanceMetric::minkowski(3.0),
  };
  aknn::rng::Engine g(211);
  for (const auto& m : metrics) {
    for (int round = 0; round < 10000; ++round) {
      const std::size_t dim = 1 + aknn::rng::uniform_index(g, 8);
      const auto a = ts::random_vector(g, dim);
      const auto b = ts::random_vector(g, dim);
      const auto c = ts::random_vector(g, dim);

      const double ab = aknn::distance(m, a, b);
      ASSERT_GE(ab, 0.0);
      ASSERT_EQ(ab, aknn::distance(m, b, a));
      ASSERT_EQ(aknn::distance(m, a, a), 0.0);
      const double detour = aknn::distance(m, a, c) + aknn::distance(m, c, b);
      ASSERT_LE(ab, detour * (1.0 + 1e-9));

      if (m.kind == aknn::MetricKind::Minkowski && m.q == 1.0) {
        const double reference = aknn::distance(DistanceMetric::manhattan(), a, b);
        ASSERT_NEAR(ab, reference, 1e-9 * std::max(1.0, reference));
      }
      if (m.kind == aknn::MetricKind::Minkowski && m.q == 2.0) {
        const double reference = aknn::distance(DistanceMetric::euclidean(), a, b);
        ASSERT_NEAR(ab, reference, 1e-9 * std::max(1.0, reference));
      }
    }
  }

  EXPECT_LT(watch.seconds(), 5.0);
}

// Criterion 6: on 200 random datasets (<= 30 points, <= 3 dims, 2-4
// classes), classification and class diameters agree exactly with the
// brute-force oracles on every query and class.
TEST(Acceptance, BruteForceOracleEquivalence) {
  const Stopwatch watch;

  aknn::rng::Engine g(307);
  const DistanceMetric metrics[] = {DistanceMetric::euclidean(),
                                    DistanceMetric::manhattan(),
                                    DistanceMetric::minkowski(3.0)};
  for (int round = 0; round < 200; ++round) {
    const std::size_t n_classes = 2 + aknn::rng::uniform_index(g, 3);
    const std::size_t n = n_classes + aknn::rng::uniform_index(g, 31 - n_classes);
    const std::size_t dim = 1 + aknn::rng::uniform_index(g, 3);
    const auto data = ts::random_dataset(g, n, dim, n_classes);
    const auto& metric = metrics[round % 3];
    const std::size_t k = 1 + aknn::rng::uniform_index(g, n);

    const auto model = KnnModel::fit(data, {k, metric});
    for (int q = 0; q < 10; ++q) {
      const auto query = ts::random_vector(g, dim, -15.0, 15.0);
      ASSERT_EQ(model.classify(query),
                oracle::knn_label(data, metric.kind, metric.q, k, query));
    }
    for (const auto& instance : data.instances) {
      ASSERT_EQ(model.classify(instance.features),
                oracle::knn_label(data, metric.kind, metric.q, k,
                                  instance.features));
    }

    std::map<Label, std::vector<aknn::FeatureVector>> by_class;
    for (const auto& instance : data.instances) {
      by_class[*instance.label].push_back(instance.features);
    }
    for (const auto& [label, members] : by_class) {
      ASSERT_EQ(aknn::tca(members, metric),
                oracle::max_pairwise_distance(members, metric.kind, metric.q));
    }
  }

  EXPECT_LT(watch.seconds(), 10.0);
}

// Criterion 7: published result tables for this method are not reproducible
// cell-for-cell (the original split and injected points were never
// published); the repository documents that and the trend-based criteria
// above stand in. Verified here by checking the README section exists.
TEST(Acceptance, ReproducibilityLimitIsDocumented) {
  const std::filesystem::path readme =
      std::filesystem::path(AKNN_REPO_DIR) / "README.md";
  ASSERT_TRUE(std::filesystem::exists(readme));

  std::ifstream in(readme);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  EXPECT_NE(text.find("## Reproducibility"), std::string::npos);
  EXPECT_NE(text.find("seed"), std::string::npos);
  EXPECT_NE(text.find("cell-for-cell"), std::string::npos);
}
