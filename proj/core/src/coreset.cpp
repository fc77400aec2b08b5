#include "kdecoreset/coreset.hpp"

#include <cmath>
#include <stdexcept>

#include "kdecoreset/accumulate.hpp"

namespace kdecoreset {

Coreset::Coreset(const PointSet& parent, std::vector<std::size_t> indices,
                 std::optional<std::vector<double>> weights)
    : parent_(&parent), indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("coreset must select at least one index");
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (indices_[j] >= parent.size())
      throw std::invalid_argument("coreset index out of range");
    if (j > 0 && indices_[j] <= indices_[j - 1])
      throw std::invalid_argument("coreset indices must be strictly increasing");
  }
  if (weights) {
    if (weights->size() != indices_.size())
      throw std::invalid_argument("weights must match indices in length");
    KahanSum sum;
    for (double w : *weights) {
      if (w < 0.0 || !std::isfinite(w))
        throw std::invalid_argument("coreset weights must be non-negative");
      sum.add(w);
    }
    if (std::abs(sum.value() - 1.0) > kWeightSumTolerance)
      throw std::invalid_argument("coreset weights must sum to 1");
    weights_ = std::move(*weights);
  }
}

}  // namespace kdecoreset
