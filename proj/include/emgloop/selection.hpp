#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "emgloop/features.hpp"

namespace emgloop {

struct MiConfig {
  enum class Strategy { EqualWidth };
  int bins{10};  // >= 2
  Strategy strategy{Strategy::EqualWidth};
};

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientClasses : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyDataset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mutual information in bits between a real-valued sample and a discrete
// label sequence. x is discretized into equal-width bins over [min, max];
// a constant x carries no information and yields 0.
double mutual_information(std::span<const double> x, std::span<const int> y,
                          const MiConfig& config);

// Greedy forward selection under the mutual-information difference
// objective: at each step pick the feature maximizing
//   I(f; class) - (1/|S|) sum_{s in S} I(f; s),
// with feature-feature MI computed on the same discretization. Ties break
// toward the lower feature index. `columns` is one vector per feature.
struct SelectionResult {
  std::vector<std::size_t> ranked;  // feature indices in selection order
  std::vector<double> scores;       // objective value at each step
};

SelectionResult mrmr_select(const std::vector<std::vector<double>>& columns,
                            std::span<const int> labels, std::size_t k,
                            const MiConfig& config);

// Convenience wrapper over labeled feature vectors; every vector must carry
// a quadrant label.
struct FeatureSelection {
  std::vector<FeatureId> ranked_ids;
  std::vector<double> scores;
};

FeatureSelection mrmr_select(const std::vector<FeatureVector>& vectors, std::size_t k,
                             const MiConfig& config);

// rank,feature,score rows in selection order.
void write_ranking_csv(std::ostream& out, const FeatureSelection& selection);

}  // namespace emgloop
