#pragma once

#include <map>
#include <span>

#include "aknn/knn.hpp"

namespace aknn {

/// Rejection geometry of one training class. tca is the class diameter
/// (maximum pairwise distance among its training instances); area, the
/// rejection threshold, is gc * tca.
struct ClassRegion {
  Label label;
  double tca = 0.0;
  double area = 0.0;
  std::size_t support = 0;
};

enum class Outcome { Known, Unknown };

struct Prediction {
  Outcome outcome = Outcome::Known;
  Label expected_class;
  double min_dist = 0.0;
  double area_of_expected = 0.0;
  std::vector<std::size_t> neighbor_indices;

  bool is_unknown() const { return outcome == Outcome::Unknown; }

  /// The predicted label, or nullopt for Unknown.
  std::optional<Label> label() const;
};

/// Which neighbor distance gets compared against the class area.
enum class MinDistMode {
  GlobalMin,         // nearest of the selected top k, any label
  ExpectedClassMin,  // nearest top-k neighbor carrying the expected class
};

const char* to_string(MinDistMode mode);

/// Maximum pairwise distance among the given instances; 0 for a single
/// instance. Throws EmptyClass when the span is empty.
double tca(std::span<const FeatureVector> class_instances,
           const DistanceMetric& metric);

/// kNN with open-set rejection: a query whose nearest selected distance
/// exceeds the expected class's area is classified Unknown instead of being
/// forced into a known class. Immutable after fit.
class AknnModel {
 public:
  /// Fits the embedded kNN model and computes one ClassRegion per training
  /// label with area = gc * tca. Classes with zero diameter (single instance
  /// or identical points) reject every non-coincident query; each one is
  /// reported through warnings().
  static AknnModel fit(Dataset training, HyperParams params,
                       MinDistMode mode = MinDistMode::GlobalMin);

  /// Ranks the top-k neighbors, picks the majority (expected) class, then
  /// rejects as Unknown iff min_dist > area of the expected class. Equality
  /// classifies as Known.
  Prediction classify(const FeatureVector& query) const;

  /// Same model with all areas rescaled to gc * tca. TCAs are reused, not
  /// recomputed. Throws NonPositiveGc for gc <= 0.
  AknnModel with_gap_constant(double gc) const;

  const KnnModel& base() const { return base_; }
  const std::map<Label, ClassRegion>& regions() const { return regions_; }
  const ClassRegion& region(const Label& label) const;
  double gap_constant() const { return gc_; }
  MinDistMode mode() const { return mode_; }

  /// Diagnostics emitted at fit time, e.g. zero-diameter classes.
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t dim() const { return base_.dim(); }

 private:
  AknnModel(KnnModel base, std::map<Label, ClassRegion> regions, double gc,
            MinDistMode mode, std::vector<std::string> warnings);

  KnnModel base_;
  std::map<Label, ClassRegion> regions_;
  double gc_;
  MinDistMode mode_;
  std::vector<std::string> warnings_;
};

}  // namespace aknn
