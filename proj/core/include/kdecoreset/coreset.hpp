#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// Subset of a parent PointSet, addressed by strictly increasing indices.
// Weights, when present, are non-negative and sum to 1 within 1e-9; absent
// weights mean uniform 1/|indices|.  The coreset does not own its parent.
class Coreset {
 public:
  Coreset(const PointSet& parent, std::vector<std::size_t> indices,
          std::optional<std::vector<double>> weights = std::nullopt);

  const PointSet& parent() const { return *parent_; }
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool weighted() const { return !weights_.empty(); }

  double weight(std::size_t j) const {
    return weights_.empty() ? 1.0 / static_cast<double>(indices_.size()) : weights_[j];
  }
  std::span<const double> weights() const { return weights_; }  // empty when uniform

  std::span<const double> point(std::size_t j) const { return parent_->point(indices_[j]); }

 private:
  const PointSet* parent_;
  std::vector<std::size_t> indices_;
  std::vector<double> weights_;
};

inline constexpr double kWeightSumTolerance = 1e-9;

}  // namespace kdecoreset
